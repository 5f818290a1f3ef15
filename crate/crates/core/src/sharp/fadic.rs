//! f-adic expansions `r = Σ σ(r_α) f^α` and the endomorphism series of
//! multiplication by `r`.

use std::collections::BTreeMap;

use crate::artin::ArtinAlgebra;
use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::linalg::Matrix;
use crate::local::{StandardBasis, TrackedReducer};
use crate::poly::Polynomial;

/// Multi-index, one entry per generator.
pub type MultiIndex = Vec<u32>;

#[derive(Clone, Debug)]
pub struct FAdicExpansion {
    pub element: Polynomial,
    /// Componentwise cap `β`.
    pub bound: MultiIndex,
    /// `r_α` (reduced, supported on the quotient basis) for every `α ≤ β`.
    pub coefficients: BTreeMap<MultiIndex, Polynomial>,
    /// Working precision: series were handled modulo `m^truncation`.
    pub truncation: u32,
}

impl FAdicExpansion {
    pub fn coefficient(&self, alpha: &[u32]) -> Option<&Polynomial> {
        self.coefficients.get(alpha)
    }

    /// `r − Σ_{α≤β} σ(r_α) f^α`, which must lie in `(f_i^{β_i+1})_i`.
    pub fn tail(&self, generators: &[Polynomial]) -> Polynomial {
        let mut acc = self.element.clone();
        for (alpha, c) in &self.coefficients {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for (f, &e) in generators.iter().zip(alpha) {
                if e > 0 {
                    t = t.mul(&f.pow(e));
                }
            }
            acc = acc.sub(&t);
        }
        acc
    }

    /// Checks the tail by exact membership in `(f_1^{β_1+1}, …)`.
    pub fn verify(&self, generators: &[Polynomial], limits: &crate::Limits) -> Result<bool> {
        let powers: Vec<Polynomial> = generators
            .iter()
            .zip(&self.bound)
            .map(|(f, &b)| f.pow(b + 1))
            .collect();
        StandardBasis::uncertified(&powers, limits)?.contains(&self.tail(generators))
    }
}

fn index_cells(bound: &[u32]) -> Vec<MultiIndex> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.sort_by_key(|a| (a.iter().sum::<u32>(), a.clone()));
    out
}

/// Precision needed for bound `β`: `m^{s(|β|+1)} ⊂ I^{|β|+1}`, and every
/// product of `|β|+1` generators is a multiple of some `f_i^{β_i+1}`.
fn working_precision(a: &ArtinAlgebra, bound: &[u32]) -> Result<u32> {
    let total: u32 = bound.iter().sum();
    let n = a.containment_index().max(1) * (total + 1);
    let cap = a.standard_basis().limits().max_degree;
    if n > cap {
        return Err(Error::Inconclusive(format!(
            "f-adic expansion needs precision {n}, above the degree cap {cap}"
        )));
    }
    Ok(n)
}

fn expand_with(red: &TrackedReducer<'_>, a: &ArtinAlgebra, r: &Polynomial, bound: &[u32]) -> Result<FAdicExpansion> {
    let k = a.generators().len();
    if bound.len() != k {
        return Err(Error::Arity {
            expected: k,
            found: bound.len(),
        });
    }
    let prec = red.bound();
    let zero = Polynomial::zero(a.ring());
    let mut pending: BTreeMap<MultiIndex, Polynomial> = BTreeMap::new();
    pending.insert(vec![0; k], r.truncate(prec));
    let mut coefficients = BTreeMap::new();
    for alpha in index_cells(bound) {
        let c = pending.remove(&alpha).unwrap_or_else(|| zero.clone());
        if c.is_zero() {
            coefficients.insert(alpha, zero.clone());
            continue;
        }
        let (rem, cof) = red.reduce(&c)?;
        for (i, ai) in cof.into_iter().enumerate() {
            if ai.is_zero() || alpha[i] >= bound[i] {
                continue;
            }
            let mut next = alpha.clone();
            next[i] += 1;
            let slot = pending.entry(next).or_insert_with(|| zero.clone());
            *slot = slot.add(&ai);
        }
        coefficients.insert(alpha, rem);
    }
    Ok(FAdicExpansion {
        element: r.clone(),
        bound: bound.to_vec(),
        coefficients,
        truncation: prec,
    })
}

/// Expands `r` up to the componentwise bound `β` by repeated division.
pub fn f_adic_expand(a: &ArtinAlgebra, r: &Polynomial, bound: &[u32]) -> Result<FAdicExpansion> {
    let prec = working_precision(a, bound)?;
    let red = TrackedReducer::new(a.certified_basis()?, prec)?;
    expand_with(&red, a, r, bound)
}

/// `r^♯ = Σ γ_α f^α`, with `γ_α` the matrix whose column `j` is the
/// α-coefficient of `r · b_j`.
#[derive(Clone, Debug)]
pub struct EndoSeries {
    pub bound: MultiIndex,
    pub gammas: BTreeMap<MultiIndex, Matrix>,
}

impl EndoSeries {
    pub fn gamma(&self, alpha: &[u32]) -> Option<&Matrix> {
        self.gammas.get(alpha)
    }
}

pub fn endo_series(a: &ArtinAlgebra, r: &Polynomial, bound: &[u32]) -> Result<EndoSeries> {
    let prec = working_precision(a, bound)?;
    let red = TrackedReducer::new(a.certified_basis()?, prec)?;
    let exec = a.standard_basis().limits().exec;
    let exps = crate::par::try_map(exec, &a.basis_polynomials(), |b| {
        expand_with(&red, a, &r.mul_truncated(b, Some(prec)), bound)
    })?;
    let d = a.dim();
    let mut gammas = BTreeMap::new();
    for alpha in index_cells(bound) {
        let cols: Vec<Vec<Coeff>> = exps
            .iter()
            .map(|e| a.coords_of_reduced(&e.coefficients[&alpha]))
            .collect();
        gammas.insert(alpha, Matrix::from_columns(a.field(), d, cols));
    }
    Ok(EndoSeries {
        bound: bound.to_vec(),
        gammas,
    })
}

/// `Res[r df_1^{m_1} ∧ … / f_1^{m_1}, …]`-type residue `Tr(γ_{m−1})` for
/// the sharp operator of `r` (the case `r_j = f_j`).
pub fn residue_power(a: &ArtinAlgebra, r: &Polynomial, m: &[u32]) -> Result<Coeff> {
    if m.iter().any(|&e| e == 0) {
        return Err(Error::InvalidInput("powers must be positive".into()));
    }
    let beta: Vec<u32> = m.iter().map(|e| e - 1).collect();
    let series = endo_series(a, r, &beta)?;
    Ok(series.gammas[&beta].trace())
}
