//! Integral closure orders: Newton polyhedra of monomial ideals, arc
//! valuations, Łojasiewicz lower bounds for the Jacobian, and the Hessian
//! criterion for isolated hypersurface singularities.

mod arcs;
mod hessian;
mod loja;
mod newton;

pub use arcs::{arc_report, samuel_bounds, ArcReport, SamuelBounds, TargetOrder};
pub use hessian::{hessian_criterion, ClosureCheck, HessianVerdict};
pub use loja::{loja_certificate, LojaCase, LojaCertificate};
pub use newton::{samuel_monomial, Extended, Facet, NewtonPolyhedron, MAX_GENERATORS, MAX_VARS};
