use std::fmt;

use super::newton::NewtonPolyhedron;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::local::{quotient_dimension_of, StandardBasis};
use crate::poly::{gradient, hessian_det, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureCheck {
    /// The Jacobian ideal is not monomial.
    NotComputed,
    Closed(bool),
}

impl fmt::Display for ClosureCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureCheck::NotComputed => f.write_str("not computed"),
            ClosureCheck::Closed(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HessianVerdict {
    pub isolated: bool,
    /// Milnor number when the singularity is isolated.
    pub milnor: Option<usize>,
    pub hessian: Polynomial,
    pub hessian_in_jacobian_ideal: bool,
    pub jacobian_ideal_closed: ClosureCheck,
    /// The equivalence `isolated ⟺ H ∉ (∂f)` was checked (characteristic 0).
    pub asserted: bool,
}

/// Isolatedness of `f`, membership of its Hessian in the Jacobian ideal, and
/// integral closedness of that ideal when it is monomial.
pub fn hessian_criterion(f: &Polynomial, limits: &Limits) -> Result<HessianVerdict> {
    let partials = gradient(f);
    let hessian = hessian_det(f);
    let nonzero: Vec<Polynomial> = partials.iter().filter(|p| !p.is_zero()).cloned().collect();
    let (isolated, milnor, in_ideal) = if nonzero.is_empty() {
        (false, None, hessian.is_zero())
    } else {
        let sb = StandardBasis::new(&nonzero, limits)?;
        let qd = quotient_dimension_of(&sb);
        let (r, cert) = sb.normal_form(&hessian)?;
        let inside = r.is_zero();
        if inside && !cert.verify(&hessian, &nonzero) {
            return Err(Error::Violation("Hessian membership certificate does not re-multiply".into()));
        }
        (qd.is_finite(), qd.dim(), inside)
    };
    let closed = if !nonzero.is_empty() && nonzero.iter().all(|p| p.as_term().is_some()) {
        ClosureCheck::Closed(NewtonPolyhedron::from_generators(&nonzero)?.is_integrally_closed())
    } else {
        ClosureCheck::NotComputed
    };
    let asserted = f.field().characteristic() == 0;
    if asserted && isolated == in_ideal {
        return Err(Error::Violation(format!(
            "isolated = {isolated} but Hessian in Jacobian ideal = {in_ideal}"
        )));
    }
    Ok(HessianVerdict {
        isolated,
        milnor,
        hessian,
        hessian_in_jacobian_ideal: in_ideal,
        jacobian_ideal_closed: closed,
        asserted,
    })
}
