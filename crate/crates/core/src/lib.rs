//! Exact computations with Jacobians and residues of zero-dimensional
//! complete intersections in local rings `k[[x_1..x_n]]`.

pub mod artin;
pub mod closure;
pub mod error;
pub mod field;
pub mod limits;
pub mod linalg;
pub mod local;
pub mod par;
pub mod poly;
pub mod relative;
pub mod sharp;

pub use error::{Error, Result};
pub use field::{Coeff, Field};
pub use limits::Limits;
pub use par::Exec;
