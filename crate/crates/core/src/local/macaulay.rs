//! Independent membership oracle by linear algebra on truncated multiples.
//!
//! Columns are the monomials of degree `< N` in descending local order, so
//! the pivot of a row is its local leading monomial. Once `m^N ⊂ I`, the
//! image of `I` in `k[x]/m^N` is spanned by the truncated `m · f_i`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{SparseEchelon, SparseVec};
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Debug)]
pub struct Macaulay {
    bound: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: SparseEchelon,
}

impl Macaulay {
    /// Row space of `{m · f_i mod m^bound}`.
    pub fn build(generators: &[Polynomial], bound: u32, limits: &Limits) -> Self {
        let ring = generators[0].ring();
        let n = ring.n();
        let monomials = Monomial::below_degree(n, bound);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut jobs = Vec::new();
        for f in generators {
            let Some(o) = f.order() else { continue };
            if o >= bound {
                continue;
            }
            for m in Monomial::below_degree(n, bound - o) {
                jobs.push((f, m));
            }
        }
        let rows: Vec<SparseVec> = crate::par::map(limits.exec, &jobs, |(f, m)| {
            let p = f.truncate(bound - m.degree());
            p.terms().map(|(t, c)| (index[&t.mul(m)], c.clone())).collect()
        });
        let mut echelon = SparseEchelon::new(ring.field());
        for r in rows {
            echelon.insert(r);
        }
        Macaulay {
            bound,
            monomials,
            index,
            echelon,
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn vector(&self, g: &Polynomial) -> SparseVec {
        g.truncate(self.bound)
            .terms()
            .map(|(m, c)| (self.index[m], c.clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Membership of `g` in `I + m^bound`.
    pub fn contains(&self, g: &Polynomial) -> bool {
        self.echelon.contains(self.vector(g))
    }

    /// `dim_k k[x]/(I + m^bound)`.
    pub fn corank(&self) -> usize {
        self.monomials.len() - self.echelon.rank()
    }

    /// Leading monomials of `I + m^bound` of degree `< bound`.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.echelon.pivot_columns().map(|c| self.monomials[c].clone()).collect()
    }
}

/// Least `s` with `m^s ⊂ I`, by checking `m^d ⊂ I + m^{d+1}` for
/// `d = 0, 1, …` (Nakayama).
pub fn macaulay_containment_index(generators: &[Polynomial], limits: &Limits) -> Result<u32> {
    let n = generators[0].ring().n();
    for d in 0..=limits.max_degree {
        let mac = Macaulay::build(generators, d + 1, limits);
        let all = Monomial::of_degree(n, d)
            .into_iter()
            .all(|m| mac.contains(&Polynomial::monomial(generators[0].ring(), m)));
        if all {
            return Ok(d);
        }
    }
    Err(Error::Inconclusive(format!(
        "no power of the maximal ideal up to degree {} lies in the ideal",
        limits.max_degree
    )))
}

/// Decides `g ∈ I` for m-primary `I` using truncation degree
/// `N = s + deg g + 1`.
pub fn macaulay_member(g: &Polynomial, generators: &[Polynomial], limits: &Limits) -> Result<bool> {
    if g.is_zero() {
        return Ok(true);
    }
    let s = macaulay_containment_index(generators, limits)?;
    let bound = s + g.degree().unwrap_or(0) + 1;
    if bound > limits.max_degree {
        return Err(Error::Inconclusive(format!("truncation degree {bound} exceeds the cap")));
    }
    Ok(Macaulay::build(generators, bound, limits).contains(g))
}

/// `dim_k k[[x]]/I` as the corank at degree `s + 1`.
pub fn macaulay_dimension(generators: &[Polynomial], limits: &Limits) -> Result<usize> {
    let s = macaulay_containment_index(generators, limits)?;
    Ok(Macaulay::build(generators, s + 1, limits).corank())
}
