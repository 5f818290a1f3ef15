use num_rational::BigRational;

use super::newton::Extended;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::local::ideal_order;
use crate::par;
use crate::poly::{compose_arc, jacobian_data, minor, Arc, Polynomial, UniPoly};

/// Orders of a system (and optionally of a test element `u`) along one arc.
#[derive(Clone, Debug)]
pub struct ArcReport {
    /// `ord_t(f_i ∘ φ)`, `None` meaning `+∞`.
    pub orders: Vec<Option<usize>>,
    /// `ord_t(I ∘ φ)`; `None` when the arc lies in the zero set of `I`.
    pub min_order: Option<usize>,
    pub jacobian_order: Option<usize>,
    pub target: Option<TargetOrder>,
    /// The Cramer identity `φ_j' · J(φ) = Σ_i (-1)^{i+j} Δ_ij(φ) · (f_i ∘ φ)'`
    /// for every `j`; `None` for non-square systems.
    pub cramer_ok: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct TargetOrder {
    pub order: Option<usize>,
    /// `ord_t(u ∘ φ) / ord_t(I ∘ φ)`; `None` when the denominator is `0` or `+∞`.
    pub ratio: Option<Extended>,
}

pub fn arc_report(generators: &[Polynomial], arc: &Arc, u: Option<&Polynomial>) -> Result<ArcReport> {
    let ring = generators
        .first()
        .ok_or_else(|| Error::InvalidInput("no generators".into()))?
        .ring();
    if arc.arity() != ring.n() {
        return Err(Error::Arity {
            expected: ring.n(),
            found: arc.arity(),
        });
    }
    let composed: Vec<(UniPoly, Option<usize>)> =
        generators.iter().map(|f| compose_arc(f, arc)).collect::<Result<_>>()?;
    let orders: Vec<Option<usize>> = composed.iter().map(|c| c.1).collect();
    let min_order = orders.iter().flatten().min().copied();
    let target = match u {
        Some(u) => {
            let (_, order) = compose_arc(u, arc)?;
            let ratio = match (min_order, order) {
                (None | Some(0), _) => None,
                (Some(d), Some(k)) => Some(Extended::ratio(k, d)),
                (Some(_), None) => Some(Extended::Infinite),
            };
            Some(TargetOrder { order, ratio })
        }
        None => None,
    };
    let (jacobian_order, cramer_ok) = if generators.len() == ring.n() {
        let jd = jacobian_data(generators)?;
        let (jphi, jord) = compose_arc(&jd.det, arc)?;
        let n = ring.n();
        let derivs: Vec<UniPoly> = composed.iter().map(|c| c.0.derivative()).collect();
        let mut ok = true;
        for j in 0..n {
            let lhs = arc.components()[j].derivative().mul(&jphi);
            let mut rhs = UniPoly::zero(ring.field());
            for (i, d) in derivs.iter().enumerate() {
                let (delta, _) = compose_arc(&minor(&jd.matrix, i, j), arc)?;
                let term = delta.mul(d);
                rhs = if (i + j) % 2 == 0 { rhs.add(&term) } else { rhs.sub(&term) };
            }
            if lhs != rhs {
                ok = false;
            }
        }
        (jord, Some(ok))
    } else {
        (None, None)
    };
    Ok(ArcReport {
        orders,
        min_order,
        jacobian_order,
        target,
        cramer_ok,
    })
}

/// `lower <= v̄_I(u) <= upper`.
#[derive(Clone, Debug)]
pub struct SamuelBounds {
    pub lower: Extended,
    /// The power `m` realizing the lower bound.
    pub lower_power: Option<u32>,
    pub upper: Extended,
    /// Index of the arc realizing the upper bound.
    pub upper_arc: Option<usize>,
}

impl SamuelBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Brackets the asymptotic Samuel function: the lower bound is
/// `max_{m <= mcap} ord_I(u^m)/m`, the upper bound the least arc ratio.
pub fn samuel_bounds(
    generators: &[Polynomial],
    u: &Polynomial,
    arcs: &[Arc],
    mcap: u32,
    limits: &Limits,
) -> Result<SamuelBounds> {
    let min_gen = generators.iter().filter_map(Polynomial::order).min();
    let Some(min_gen) = min_gen else {
        return Err(Error::InvalidInput("the zero ideal has no Samuel function".into()));
    };
    if min_gen == 0 {
        return Err(Error::UnitIdeal);
    }
    let reports = par::try_map(limits.exec, arcs, |a| arc_report(generators, a, Some(u)))?;
    let mut upper = Extended::Infinite;
    let mut upper_arc = None;
    for (k, r) in reports.iter().enumerate() {
        if let Some(ratio) = r.target.as_ref().and_then(|t| t.ratio.clone()) {
            if ratio < upper {
                upper = ratio;
                upper_arc = Some(k);
            }
        }
    }
    let (lower, lower_power) = if u.is_zero() {
        (Extended::Infinite, None)
    } else {
        let mut best = Extended::int(0);
        let mut at = None;
        let mut power = Polynomial::one(u.ring());
        for m in 1..=mcap.max(1) {
            power = power.mul(u);
            let cap = power.order().unwrap_or(0) / min_gen + 1;
            let k = ideal_order(&power, generators, cap, limits)?;
            let q = Extended::Finite(BigRational::new(k.into(), m.into()));
            if q > best {
                best = q;
                at = Some(m);
            }
        }
        (best, at)
    };
    if lower > upper {
        return Err(Error::Violation(format!(
            "Samuel bounds out of order: lower {lower} exceeds upper {upper}"
        )));
    }
    Ok(SamuelBounds {
        lower,
        lower_power,
        upper,
        upper_arc,
    })
}
