//! The residue functional from the reduced Bezoutian.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::artin::ArtinAlgebra;
use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::linalg::Matrix;
use crate::poly::{poly_det, Monomial, Polynomial, Ring};

/// `ℓ = Res[· dx / f]` on `P`, with the reduced Bezoutian and the pairing.
#[derive(Clone, Debug)]
pub struct ResidueFunctional {
    algebra: ArtinAlgebra,
    /// `ℓ(b_μ)` for each basis monomial.
    pub values: Vec<Coeff>,
    /// Reduced Bezoutian `Σ M[μ][ν] b_μ ⊗ b_ν`.
    pub bezoutian: Matrix,
    /// `T[i][j] = ℓ(b_i b_j)`.
    pub pairing: Matrix,
}

/// Divided differences `a_ij` for the telescoping order `order` of the
/// variables, in the doubled ring `(x, y)`.
fn divided_differences(fs: &[Polynomial], doubled: &std::sync::Arc<Ring>, order: &[usize]) -> Vec<Vec<Polynomial>> {
    let n = fs[0].ring().n();
    let mut pos = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    fs.iter()
        .map(|f| {
            (0..n)
                .map(|j| {
                    let mut out = Polynomial::zero(doubled);
                    for (m, c) in f.terms() {
                        let e = m.exponents();
                        if e[j] == 0 {
                            continue;
                        }
                        let mut base = vec![0u32; 2 * n];
                        for k in 0..n {
                            if k == j {
                                continue;
                            }
                            // earlier in the order: y; later: x
                            if pos[k] < pos[j] {
                                base[n + k] = e[k];
                            } else {
                                base[k] = e[k];
                            }
                        }
                        for t in 0..e[j] {
                            let mut ex = base.clone();
                            ex[n + j] = t;
                            ex[j] = e[j] - 1 - t;
                            out.add_term(Monomial::new(ex), c);
                        }
                    }
                    out
                })
                .collect()
        })
        .collect()
}

fn doubled_ring(ring: &Ring) -> Result<std::sync::Arc<Ring>> {
    let mut vars: Vec<String> = ring.vars().to_vec();
    vars.extend(ring.vars().iter().map(|v| format!("{v}'")));
    Ring::new(vars, ring.field().clone())
}

/// Reduced Bezoutian matrix for a given telescoping order.
pub fn reduced_bezoutian(a: &ArtinAlgebra, order: &[usize]) -> Result<Matrix> {
    let ring = a.ring();
    let n = ring.n();
    let fs = a.generators();
    if fs.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: fs.len(),
        });
    }
    let doubled = doubled_ring(ring)?;
    let delta = poly_det(&divided_differences(fs, &doubled, order));
    // group by the x-part
    let mut by_x: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for (m, c) in delta.terms() {
        let e = m.exponents();
        let xm = Monomial::new(e[..n].to_vec());
        let ym = Monomial::new(e[n..].to_vec());
        by_x.entry(xm)
            .or_insert_with(|| Polynomial::zero(ring))
            .add_term(ym, c);
    }
    let d = a.dim();
    let f = a.field().clone();
    let mut m = Matrix::zeros(&f, d, d);
    for (xm, ypart) in by_x {
        let cx = a.coords(&Polynomial::monomial(ring, xm))?;
        let cy = a.coords(&ypart)?;
        for (mu, u) in cx.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (nu, v) in cy.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let val = f.add(m.get(mu, nu), &f.mul(u, v));
                m.set(mu, nu, val);
            }
        }
    }
    Ok(m)
}

impl ResidueFunctional {
    pub fn new(a: &ArtinAlgebra) -> Result<Self> {
        let n = a.ring().n();
        Self::with_order(a, &(0..n).collect::<Vec<_>>())
    }

    /// Builds `ℓ` using the given telescoping order of the variables.
    pub fn with_order(a: &ArtinAlgebra, order: &[usize]) -> Result<Self> {
        let m = reduced_bezoutian(a, order)?;
        let d = a.dim();
        let f = a.field().clone();
        // Σ_μ ℓ(b_μ) M[μ][ν] = [ν = 0]; basis element 0 is the monomial 1.
        let mut rhs = vec![f.zero(); d];
        if d > 0 {
            rhs[0] = f.one();
        }
        let values = m
            .transpose()
            .solve(&rhs)
            .ok_or_else(|| Error::Violation("reduced Bezoutian does not represent 1".into()))?;
        let basis = a.basis_polynomials();
        let mut pairing = Matrix::zeros(&f, d, d);
        for i in 0..d {
            for j in i..d {
                let v = dot(&f, &values, &a.coords(&basis[i].mul(&basis[j]))?);
                pairing.set(i, j, v.clone());
                pairing.set(j, i, v);
            }
        }
        Ok(ResidueFunctional {
            algebra: a.clone(),
            values,
            bezoutian: m,
            pairing,
        })
    }

    pub fn algebra(&self) -> &ArtinAlgebra {
        &self.algebra
    }

    /// `ℓ(g) = ℓ(σ(g))`.
    pub fn eval(&self, g: &Polynomial) -> Result<Coeff> {
        Ok(dot(self.algebra.field(), &self.values, &self.algebra.coords(g)?))
    }

    /// `(ℓ(r b_j))_j`.
    pub fn pairing_row(&self, r: &Polynomial) -> Result<Vec<Coeff>> {
        let red = self.algebra.reduce(r)?;
        self.algebra
            .basis_polynomials()
            .iter()
            .map(|b| self.eval(&red.mul(b)))
            .collect()
    }

    /// Checks `Σ_μ ℓ(g b_μ) c_μ = ḡ` where `c_μ = Σ_ν M[μ][ν] b_ν`.
    pub fn satisfies_identity(&self, g: &Polynomial) -> Result<bool> {
        let w = self.pairing_row(g)?;
        let lhs = self.bezoutian.transpose().mul_vec(&w);
        Ok(lhs == self.algebra.coords(g)?)
    }
}

fn dot(f: &crate::field::Field, a: &[Coeff], b: &[Coeff]) -> Coeff {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = f.add(&acc, &f.mul(x, y));
        }
    }
    acc
}

pub fn residue_functional(a: &ArtinAlgebra) -> Result<ResidueFunctional> {
    ResidueFunctional::new(a)
}

/// Result of checking that `r ∈ I` exactly when `ℓ(r·h) = 0` for all `h`.
#[derive(Clone, Debug)]
pub struct NondegeneracyReport {
    pub pairing_invertible: bool,
    /// Per probe: (all pairings vanish, membership in the ideal).
    pub probes: Vec<(bool, bool)>,
    pub asserted: bool,
}

pub fn nondegeneracy_check(rf: &ResidueFunctional, probes: &[Polynomial]) -> Result<NondegeneracyReport> {
    let a = rf.algebra();
    let pairing_invertible = rf.pairing.inverse().is_some();
    let asserted = a.field().characteristic() == 0;
    if asserted && !pairing_invertible {
        return Err(Error::Violation("residue pairing is degenerate".into()));
    }
    let exec = a.standard_basis().limits().exec;
    let probes = crate::par::try_map(exec, probes, |r| {
        let kernel = rf.pairing_row(r)?.iter().all(Zero::is_zero);
        let member = a.standard_basis().contains(r)?;
        Ok((kernel, member))
    })?;
    if asserted {
        if let Some(i) = probes.iter().position(|(k, m)| k != m) {
            return Err(Error::Violation(format!(
                "probe {i}: pairing kernel and ideal membership disagree"
            )));
        }
    }
    Ok(NondegeneracyReport {
        pairing_invertible,
        probes,
        asserted,
    })
}
