use std::fmt;
use std::sync::Arc as Shared;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::arcs::{arc_report, samuel_bounds, SamuelBounds};
use super::newton::{samuel_monomial, Extended};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::local::containment_index;
use crate::poly::{jacobian_data, Arc, Polynomial, Ring};

/// `n - rank0`, bucketed the way the lower bound depends on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LojaCase {
    AtMostOne,
    Two,
    AtLeastThree,
}

impl fmt::Display for LojaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LojaCase::AtMostOne => "n-m<=1",
            LojaCase::Two => "n-m=2",
            LojaCase::AtLeastThree => "n-m>=3",
        })
    }
}

#[derive(Clone, Debug)]
pub struct LojaCertificate {
    pub n: usize,
    pub rank0: usize,
    pub case: LojaCase,
    /// Variables eliminated because a generator is exactly a multiple of
    /// them; the remaining quantities refer to the reduced system.
    pub eliminated: Vec<usize>,
    pub reduced: Vec<Polynomial>,
    pub jacobian: Polynomial,
    pub s: Option<u32>,
    pub min_order: Option<u32>,
    /// Two remaining variables and every generator of order at least 3.
    pub strict: bool,
    pub theta_lb: Option<BigRational>,
    /// `v̄_I(J)` when the reduced ideal is monomial.
    pub exact: Option<Extended>,
    pub bounds: Option<SamuelBounds>,
    pub jacobian_in_closure: Option<bool>,
}

/// Lower bound on the Jacobian Łojasiewicz exponent, together with the
/// Samuel-function data that supports it. Arcs are checked against the
/// order inequality `ord_t(J∘φ) >= θ_lb · ord_t(I∘φ)`.
pub fn loja_certificate(generators: &[Polynomial], arcs: &[Arc], mcap: u32, limits: &Limits) -> Result<LojaCertificate> {
    let jd = jacobian_data(generators)?;
    if generators.iter().any(|f| !f.constant_term().is_zero()) {
        return Err(Error::UnitIdeal);
    }
    let n = generators.len();
    let rank0 = jd.rank0;
    let case = match n - rank0 {
        0 | 1 => LojaCase::AtMostOne,
        2 => LojaCase::Two,
        _ => LojaCase::AtLeastThree,
    };
    let mut cert = LojaCertificate {
        n,
        rank0,
        case,
        eliminated: Vec::new(),
        reduced: generators.to_vec(),
        jacobian: jd.det.clone(),
        s: None,
        min_order: None,
        strict: false,
        theta_lb: None,
        exact: None,
        bounds: None,
        jacobian_in_closure: None,
    };
    if case == LojaCase::AtMostOne {
        return Ok(cert);
    }
    if rank0 > 0 {
        let (eliminated, reduced) = eliminate_coordinates(generators, rank0)?;
        let rjd = jacobian_data(&reduced)?;
        cert.eliminated = eliminated;
        cert.jacobian = rjd.det;
        cert.reduced = reduced;
    }
    let gens = cert.reduced.clone();
    let s = containment_index(&gens, limits)?;
    let min_order = gens.iter().filter_map(Polynomial::order).min();
    cert.s = Some(s);
    cert.min_order = min_order;
    cert.strict = case == LojaCase::Two && min_order.map_or(false, |o| o >= 3);
    let one = BigRational::one();
    let theta = if case == LojaCase::AtLeastThree || cert.strict {
        &one + BigRational::new(1.into(), s.into())
    } else {
        one.clone()
    };
    let j = cert.jacobian.clone();
    if let Ok(v) = samuel_monomial(&gens, &j) {
        if v < Extended::Finite(theta.clone()) {
            return Err(Error::Violation(format!("v̄(J) = {v} is below the lower bound {theta}")));
        }
        cert.exact = Some(v);
    }
    let mut reduced_arcs = Vec::with_capacity(arcs.len());
    for a in arcs {
        if a.arity() != n {
            return Err(Error::Arity {
                expected: n,
                found: a.arity(),
            });
        }
        let Some(ra) = restrict_arc(a, &cert.eliminated) else {
            continue;
        };
        let r = arc_report(&gens, &ra, Some(&j))?;
        if let (Some(d), Some(t)) = (r.min_order, r.target) {
            let lhs = t.order.map_or(Extended::Infinite, |o| Extended::int(o as i64));
            let rhs = Extended::Finite(&theta * BigRational::from_integer(d.into()));
            if lhs < rhs {
                return Err(Error::Violation(format!("arc {a} gives ord(J) = {lhs} < {theta} * {d}")));
            }
        }
        reduced_arcs.push(ra);
    }
    let bounds = samuel_bounds(&gens, &j, &reduced_arcs, mcap, limits)?;
    cert.jacobian_in_closure = match &cert.exact {
        Some(v) => Some(*v >= Extended::int(1)),
        None if bounds.lower >= Extended::int(1) => Some(true),
        None => None,
    };
    if cert.jacobian_in_closure == Some(false) || bounds.upper < Extended::int(1) {
        return Err(Error::Violation("the Jacobian is not in the integral closure".into()));
    }
    cert.bounds = Some(bounds);
    cert.theta_lb = Some(theta);
    Ok(cert)
}

/// Splits off generators that are exactly `c·x_j`: sets those variables to
/// zero in the others and drops them from the ring.
fn eliminate_coordinates(generators: &[Polynomial], rank0: usize) -> Result<(Vec<usize>, Vec<Polynomial>)> {
    let ring = generators[0].ring();
    let n = ring.n();
    let mut eliminated = Vec::new();
    let mut rest = Vec::new();
    for f in generators {
        match f.as_term() {
            Some((m, _)) if m.degree() == 1 => {
                let j = m.pure_power_var().expect("degree-one monomial");
                if eliminated.contains(&j) {
                    return Err(Error::ReductionRequired("two generators share a linear variable".into()));
                }
                eliminated.push(j);
            }
            _ => {
                if f.linear_coeffs().iter().any(|c| !c.is_zero()) {
                    return Err(Error::ReductionRequired(format!(
                        "generator {f} has a linear part but is not a coordinate"
                    )));
                }
                rest.push(f);
            }
        }
    }
    debug_assert_eq!(eliminated.len(), rank0);
    eliminated.sort_unstable();
    let kept: Vec<usize> = (0..n).filter(|i| !eliminated.contains(i)).collect();
    let target: Shared<Ring> = Ring::new(
        kept.iter().map(|&i| ring.vars()[i].clone()).collect(),
        ring.field().clone(),
    )?;
    let mut values = Vec::with_capacity(n);
    let mut next = 0;
    for i in 0..n {
        if eliminated.contains(&i) {
            values.push(Polynomial::zero(&target));
        } else {
            values.push(Polynomial::var(&target, next));
            next += 1;
        }
    }
    let reduced = rest.iter().map(|f| f.substitute(&target, &values)).collect();
    Ok((eliminated, reduced))
}

/// Drops the components of eliminated variables (`None` if nothing is left).
fn restrict_arc(arc: &Arc, eliminated: &[usize]) -> Option<Arc> {
    if eliminated.is_empty() {
        return Some(arc.clone());
    }
    let comps = arc
        .components()
        .iter()
        .enumerate()
        .filter(|(i, _)| !eliminated.contains(i))
        .map(|(_, c)| c.clone())
        .collect();
    Arc::new(comps).ok()
}
