//! Local standard bases: membership in `k[[x_1..x_n]]` for polynomial
//! generators, quotient dimensions, and a linear-algebra oracle.

mod macaulay;
mod mora;
mod quotient;
mod reduce;

pub use macaulay::{macaulay_containment_index, macaulay_dimension, macaulay_member, Macaulay};
pub use mora::{Element, MembershipCertificate, StandardBasis};
pub use quotient::{
    containment_index, containment_index_of, ideal_order, ideal_orders, power_generators,
    quotient_dimension, quotient_dimension_of, QuotientDim,
};
pub use reduce::{reduce_truncated, TrackedReducer};

use crate::error::Result;
use crate::limits::Limits;
use crate::poly::Polynomial;

/// Decides `g ∈ (f_1..f_k)·k[[x]]` with a re-multiplying certificate.
pub fn ideal_member(
    g: &Polynomial,
    generators: &[Polynomial],
    limits: &Limits,
) -> Result<(bool, MembershipCertificate)> {
    let sb = StandardBasis::new(generators, limits)?;
    let (r, cert) = sb.normal_form(g)?;
    Ok((r.is_zero(), cert))
}

pub fn normal_form(g: &Polynomial, sb: &StandardBasis) -> Result<(Polynomial, MembershipCertificate)> {
    sb.normal_form(g)
}

pub fn standard_basis(generators: &[Polynomial], limits: &Limits) -> Result<StandardBasis> {
    StandardBasis::new(generators, limits)
}
