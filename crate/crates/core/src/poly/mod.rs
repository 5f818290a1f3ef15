//! Polynomials over `Q` and `F_p`, parsing, and Jacobians.

mod jacobian;
mod monomial;
mod parse;
mod polynomial;
mod univariate;

pub use jacobian::{
    gradient, hessian_det, hessian_matrix, is_zero_matrix, jacobian_data, jacobian_matrix,
    jacobian_matrix_wrt, linear_part, minor, poly_det, JacobianData, PolyMatrix,
};
pub use monomial::Monomial;
pub use parse::{parse_arcs, parse_poly, parse_system, CoeffClause, System};
pub use polynomial::{Polynomial, Ring};
pub use univariate::{compose_arc, Arc, UniPoly};
