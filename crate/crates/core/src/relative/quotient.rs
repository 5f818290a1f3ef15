use num_traits::Zero;

use super::{CoeffKind, CoeffRingSpec};
use crate::artin::{build_quotient, ArtinAlgebra};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::Matrix;
use crate::poly::Polynomial;

/// `P = k[[x, u]]/(F + H)` as a module over `A`, with an `A`-basis lifted
/// from `P/m_A·P`. For a polynomial ring `A` everything is computed over
/// `A/(u)^N`, so results are exact modulo `(u)^N`.
#[derive(Clone, Debug)]
pub struct RelativeQuotient {
    spec: CoeffRingSpec,
    algebra: ArtinAlgebra,
    a_basis: Vec<Polynomial>,
    p_basis: Vec<Polynomial>,
    /// Inverse of the matrix whose column `j·dim A + k` holds the
    /// coordinates of `a_k·b_j`.
    change: Matrix,
}

impl RelativeQuotient {
    pub fn new(generators: &[Polynomial], spec: &CoeffRingSpec, limits: &Limits) -> Result<Self> {
        let ring = spec.ring().clone();
        let n = spec.main_vars();
        let mut flat = generators.to_vec();
        flat.extend(spec.artinian_relations());
        let algebra = build_quotient(&flat, limits).map_err(|e| match e {
            Error::InfiniteQuotient(v) => Error::NotFree(format!("P is not finite over A (no pure power of `{v}`)")),
            e => e,
        })?;
        let u_vars: Vec<Polynomial> = (n..ring.n()).map(|i| Polynomial::var(&ring, i)).collect();
        let x_vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();

        let mut special = flat.clone();
        special.extend(u_vars.iter().cloned());
        let fibre = build_quotient(&special, limits)
            .map_err(|_| Error::NotFree("P/m_A P is not finite".into()))?;
        let p_basis = fibre.basis_polynomials();

        let a_basis = if spec.kind() == CoeffKind::Field {
            vec![Polynomial::one(&ring)]
        } else {
            let mut rel = spec.artinian_relations();
            rel.extend(x_vars);
            build_quotient(&rel, limits)?.basis_polynomials()
        };

        let d = algebra.dim();
        if p_basis.len() * a_basis.len() != d || d == 0 {
            return Err(Error::NotFree(format!(
                "dim P = {d} but rank {} times dim A = {}",
                p_basis.len(),
                a_basis.len()
            )));
        }
        let mut columns = Vec::with_capacity(d);
        for b in &p_basis {
            for a in &a_basis {
                columns.push(algebra.coords(&a.mul(b))?);
            }
        }
        let m = Matrix::from_columns(algebra.field(), d, columns);
        let change = m
            .inverse()
            .ok_or_else(|| Error::NotFree("the lifted basis does not generate P over A".into()))?;
        Ok(RelativeQuotient {
            spec: spec.clone(),
            algebra,
            a_basis,
            p_basis,
            change,
        })
    }

    pub fn spec(&self) -> &CoeffRingSpec {
        &self.spec
    }

    /// Rank of `P` as a free `A`-module.
    pub fn rank(&self) -> usize {
        self.p_basis.len()
    }

    /// `dim_k` of `A` (of `A/(u)^N` for a polynomial ring).
    pub fn a_dim(&self) -> usize {
        self.a_basis.len()
    }

    /// `dim_k P`.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &ArtinAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.p_basis
    }

    /// Matrix of multiplication by `g` over `A`; entries are reduced
    /// elements of `A` written in the `u` variables.
    pub fn matrix_over_a(&self, g: &Polynomial) -> Result<Vec<Vec<Polynomial>>> {
        let ring = self.spec.ring();
        let r = self.rank();
        let da = self.a_dim();
        let mut out = vec![vec![Polynomial::zero(ring); r]; r];
        for (j, b) in self.p_basis.iter().enumerate() {
            let c = self.change.mul_vec(&self.algebra.coords(&g.mul(b))?);
            for (i, row) in out.iter_mut().enumerate() {
                let mut e = Polynomial::zero(ring);
                for (k, a) in self.a_basis.iter().enumerate() {
                    let x = &c[i * da + k];
                    if !x.is_zero() {
                        e = e.add(&a.scale(x));
                    }
                }
                row[j] = e;
            }
        }
        Ok(out)
    }

    /// `Tr_{P/A}(g)`.
    pub fn trace(&self, g: &Polynomial) -> Result<Polynomial> {
        let m = self.matrix_over_a(g)?;
        Ok(m.iter()
            .enumerate()
            .fold(Polynomial::zero(self.spec.ring()), |acc, (i, row)| acc.add(&row[i])))
    }
}

pub fn trace_over_a(
    generators: &[Polynomial],
    spec: &CoeffRingSpec,
    g: &Polynomial,
    limits: &Limits,
) -> Result<Polynomial> {
    RelativeQuotient::new(generators, spec, limits)?.trace(g)
}
