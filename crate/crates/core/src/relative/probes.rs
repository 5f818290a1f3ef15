use std::fmt;

use super::quotient::RelativeQuotient;
use super::{CoeffKind, CoeffRingSpec};
use crate::artin::build_quotient;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::local::{quotient_dimension, StandardBasis};
use crate::poly::Polynomial;

/// Outcome of a non-asserting check of a theorem's conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeStatus {
    Observed,
    NotObserved,
    /// The hypotheses do not hold, so there is nothing to observe.
    NotApplicable,
}

impl fmt::Display for ProbeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProbeStatus::Observed => "observed",
            ProbeStatus::NotObserved => "not observed",
            ProbeStatus::NotApplicable => "not applicable",
        })
    }
}

#[derive(Clone, Debug)]
pub struct WitnessCheck {
    pub witness: Polynomial,
    /// Least `k` with `w^k ∈ I`.
    pub power: u32,
    pub jacobian_times_witness_in_ideal: bool,
}

#[derive(Clone, Debug)]
pub struct Theorem31Report {
    pub kind: CoeffKind,
    /// `P` is finite and free over `A`.
    pub free: bool,
    pub rank: Option<usize>,
    pub jacobian: Polynomial,
    pub witnesses: Vec<WitnessCheck>,
    pub jacobian_in_ideal: bool,
    /// `J·√I ⊂ I` on the witnesses and `J ∉ I`.
    pub status: ProbeStatus,
    /// Conclusions were asserted (integral-domain coefficients, rank prime
    /// to the characteristic).
    pub asserted: bool,
}

/// Checks `J·w ∈ I` for radical witnesses `w` and `J ∉ I`. With no
/// witnesses supplied, every variable whose power lies in `I` is used.
pub fn theorem31_check(
    generators: &[Polynomial],
    spec: &CoeffRingSpec,
    witnesses: &[Polynomial],
    limits: &Limits,
) -> Result<Theorem31Report> {
    let jacobian = spec.jacobian(generators)?;
    let flat = spec.flattened(generators);
    let membership = StandardBasis::uncertified(&flat, limits)?;
    let certified = StandardBasis::new(&flat, limits)?;
    let in_ideal = |g: &Polynomial| -> Result<bool> {
        let (r, cert) = certified.normal_form(g)?;
        if r.is_zero() && !cert.verify(g, &flat) {
            return Err(Error::Violation("membership certificate does not re-multiply".into()));
        }
        Ok(r.is_zero())
    };
    let radical_power = |w: &Polynomial| -> Result<Option<u32>> {
        let mut p = w.clone();
        for k in 1..=limits.max_radical_power {
            if membership.contains(&p)? {
                return Ok(Some(k));
            }
            p = p.mul(w);
        }
        Ok(None)
    };
    let candidates: Vec<(Polynomial, bool)> = if witnesses.is_empty() {
        (0..spec.ring().n()).map(|i| (Polynomial::var(spec.ring(), i), false)).collect()
    } else {
        witnesses.iter().map(|w| (w.clone(), true)).collect()
    };
    let mut checks = Vec::new();
    for (w, supplied) in candidates {
        match radical_power(&w)? {
            Some(power) => checks.push(WitnessCheck {
                jacobian_times_witness_in_ideal: in_ideal(&jacobian.mul(&w))?,
                witness: w,
                power,
            }),
            None if supplied => {
                return Err(Error::InvalidInput(format!(
                    "witness {w} has no power in the ideal up to {}",
                    limits.max_radical_power
                )))
            }
            None => {}
        }
    }
    let jacobian_in_ideal = in_ideal(&jacobian)?;
    let quotient = match RelativeQuotient::new(generators, spec, limits) {
        Ok(q) => Some(q),
        Err(Error::NotFree(_)) => None,
        Err(e) => return Err(e),
    };
    let rank = quotient.as_ref().map(RelativeQuotient::rank);
    let free = quotient.is_some();
    let holds = checks.iter().all(|c| c.jacobian_times_witness_in_ideal) && !jacobian_in_ideal;
    let status = match (free, holds) {
        (false, _) => ProbeStatus::NotApplicable,
        (true, true) => ProbeStatus::Observed,
        (true, false) => ProbeStatus::NotObserved,
    };
    let p = spec.ring().field().characteristic();
    let asserted = free && spec.kind().is_domain() && rank.map_or(false, |r| p == 0 || r as u64 % p != 0);
    if asserted && !holds {
        return Err(Error::Violation(format!(
            "integral-domain coefficients but J·√I ⊂ I, J ∉ I fails (J ∈ I: {jacobian_in_ideal})"
        )));
    }
    Ok(Theorem31Report {
        kind: spec.kind(),
        free,
        rank,
        jacobian,
        witnesses: checks,
        jacobian_in_ideal,
        status,
        asserted,
    })
}

#[derive(Clone, Debug)]
pub struct Theorem33Report {
    pub kind: CoeffKind,
    /// The flattened quotient `k[[x, u]]/(F + H)` is finite dimensional.
    pub artinian: bool,
    /// Socle of `A` is simple.
    pub gorenstein: bool,
    pub jacobian: Polynomial,
    pub jacobian_in_ideal: bool,
    /// For a non-Artinian quotient over Gorenstein `A`: whether `J ∈ I`
    /// was observed.
    pub status: ProbeStatus,
}

/// Report-only probe: for Artinian Gorenstein `A` and a non-Artinian
/// quotient, is `J ∈ I`? Over a field this is the asserted half of the
/// Jacobian test.
pub fn theorem33_probe(generators: &[Polynomial], spec: &CoeffRingSpec, limits: &Limits) -> Result<Theorem33Report> {
    let gorenstein = match spec.kind() {
        CoeffKind::DomainPolynomial => {
            return Err(Error::InvalidInput("the coefficient ring is not Artinian".into()))
        }
        CoeffKind::Field => true,
        CoeffKind::ArtinianQuotient => build_quotient(&spec.u_relations()?, limits)?.socle()?.is_simple,
    };
    let jacobian = spec.jacobian(generators)?;
    let flat = spec.flattened(generators);
    let artinian = quotient_dimension(&flat, limits)?.is_finite();
    let sb = StandardBasis::new(&flat, limits)?;
    let (r, cert) = sb.normal_form(&jacobian)?;
    let jacobian_in_ideal = r.is_zero();
    if jacobian_in_ideal && !cert.verify(&jacobian, &flat) {
        return Err(Error::Violation("membership certificate does not re-multiply".into()));
    }
    let status = match (artinian || !gorenstein, jacobian_in_ideal) {
        (true, _) => ProbeStatus::NotApplicable,
        (false, true) => ProbeStatus::Observed,
        (false, false) => ProbeStatus::NotObserved,
    };
    if spec.kind() == CoeffKind::Field && spec.ring().field().characteristic() == 0 && status == ProbeStatus::NotObserved {
        return Err(Error::Violation(
            "positive-dimensional quotient over a field but the Jacobian is not in the ideal".into(),
        ));
    }
    Ok(Theorem33Report {
        kind: spec.kind(),
        artinian,
        gorenstein,
        jacobian,
        jacobian_in_ideal,
        status,
    })
}
