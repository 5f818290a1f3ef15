//! f-adic expansions, the sharp operator for `r_j = f_j`, higher-power
//! residues, and the Bezoutian residue functional.

mod bezout;
mod fadic;

pub use bezout::{
    nondegeneracy_check, reduced_bezoutian, residue_functional, NondegeneracyReport, ResidueFunctional,
};
pub use fadic::{endo_series, f_adic_expand, residue_power, EndoSeries, FAdicExpansion, MultiIndex};
