//! The finite-dimensional algebra `P = k[[x]]/I`: section, multiplication
//! operators, traces, socle, and the Jacobian-membership verdict.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::limits::Limits;
use crate::linalg::Matrix;
use crate::local::{
    containment_index_of, quotient_dimension_of, reduce_truncated, MembershipCertificate, QuotientDim,
    StandardBasis,
};
use crate::poly::{jacobian_data, Monomial, Polynomial, Ring};

/// `P = k[[x]]/I` with basis the standard monomials in descending local
/// order (so `1` comes first).
#[derive(Clone, Debug)]
pub struct ArtinAlgebra {
    sb: StandardBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Containment index `s`; reduction happens modulo `m^s ⊂ I`.
    s: u32,
    /// Basis with certificates, built on first use when `sb` has none.
    certified: OnceLock<Result<StandardBasis>>,
}

/// Matrix of multiplication by `element`; column `j` holds the coordinates
/// of `σ(element · b_j)`.
#[derive(Clone, Debug)]
pub struct MultOperator {
    pub element: Polynomial,
    pub matrix: Matrix,
}

impl MultOperator {
    pub fn is_nilpotent(&self) -> bool {
        let d = self.matrix.rows();
        d == 0 || self.matrix.pow(d as u32).is_zero()
    }

    pub fn trace(&self) -> Coeff {
        self.matrix.trace()
    }
}

#[derive(Clone, Debug)]
pub struct Socle {
    /// Basis vectors in the coordinates of the algebra basis.
    pub basis: Vec<Vec<Coeff>>,
    pub is_simple: bool,
}

impl ArtinAlgebra {
    pub fn new(sb: StandardBasis) -> Result<Self> {
        let basis = match quotient_dimension_of(&sb) {
            QuotientDim::Finite {
                standard_monomials, ..
            } => standard_monomials,
            QuotientDim::Infinite { witness } => {
                return Err(Error::InfiniteQuotient(sb.ring().vars()[witness].clone()))
            }
        };
        let s = containment_index_of(&sb)?;
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let certified = OnceLock::new();
        if sb.is_certified() {
            let _ = certified.set(Ok(sb.clone()));
        }
        Ok(ArtinAlgebra {
            sb,
            basis,
            index,
            s,
            certified,
        })
    }

    /// Standard basis carrying certificates (for cofactor tracking).
    pub fn certified_basis(&self) -> Result<&StandardBasis> {
        self.certified
            .get_or_init(|| StandardBasis::new(self.sb.generators(), self.sb.limits()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn standard_basis(&self) -> &StandardBasis {
        &self.sb
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.sb.ring()
    }

    pub fn field(&self) -> &Field {
        self.sb.ring().field()
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.sb.generators()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|m| Polynomial::monomial(self.ring(), m.clone())).collect()
    }

    pub fn containment_index(&self) -> u32 {
        self.s
    }

    fn limits(&self) -> &Limits {
        self.sb.limits()
    }

    /// The section `σ`: the representative supported on the basis.
    pub fn reduce(&self, g: &Polynomial) -> Result<Polynomial> {
        if self.basis.is_empty() {
            return Ok(Polynomial::zero(g.ring()));
        }
        reduce_truncated(&self.sb, g, self.s)
    }

    /// Coordinates of an already reduced polynomial.
    pub fn coords_of_reduced(&self, r: &Polynomial) -> Vec<Coeff> {
        let mut v = vec![Coeff::zero(); self.dim()];
        for (m, c) in r.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn coords(&self, g: &Polynomial) -> Result<Vec<Coeff>> {
        Ok(self.coords_of_reduced(&self.reduce(g)?))
    }

    pub fn from_coords(&self, v: &[Coeff]) -> Polynomial {
        Polynomial::from_terms(self.ring(), self.basis.iter().cloned().zip(v.iter().cloned()))
    }

    pub fn mult_matrix(&self, g: &Polynomial) -> Result<MultOperator> {
        let g_red = self.reduce(g)?;
        let cols = crate::par::try_map(self.limits().exec, &self.basis, |b| {
            let prod = g_red.mul_truncated(&Polynomial::monomial(self.ring(), b.clone()), Some(self.s));
            self.coords(&prod)
        })?;
        Ok(MultOperator {
            element: g.clone(),
            matrix: Matrix::from_columns(self.field(), self.dim(), cols),
        })
    }

    /// `Tr(p_r)`, the residue of `r df_1 ∧ … ∧ df_n` over `(f_1..f_n)`.
    pub fn trace_residue(&self, r: &Polynomial) -> Result<Coeff> {
        Ok(self.mult_matrix(r)?.trace())
    }

    /// Common kernel of multiplication by every variable.
    pub fn socle(&self) -> Result<Socle> {
        let n = self.ring().n();
        let ops = crate::par::try_map(self.limits().exec, &(0..n).collect::<Vec<_>>(), |&i| {
            self.mult_matrix(&Polynomial::var(self.ring(), i))
        })?;
        let d = self.dim();
        let mut stacked = Matrix::zeros(self.field(), n * d, d);
        for (k, op) in ops.iter().enumerate() {
            for r in 0..d {
                for c in 0..d {
                    stacked.set(k * d + r, c, op.matrix.get(r, c).clone());
                }
            }
        }
        let basis = stacked.nullspace();
        let is_simple = basis.len() == 1;
        Ok(Socle { basis, is_simple })
    }

    /// Whether the reduced `g` lies in the span of the socle.
    pub fn in_socle(&self, g: &Polynomial) -> Result<bool> {
        let r = self.reduce(g)?;
        for i in 0..self.ring().n() {
            if !self.reduce(&r.mul(&Polynomial::var(self.ring(), i)))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn build_quotient(generators: &[Polynomial], limits: &Limits) -> Result<ArtinAlgebra> {
    ArtinAlgebra::new(StandardBasis::uncertified(generators, limits)?)
}

pub fn mult_matrix(a: &ArtinAlgebra, g: &Polynomial) -> Result<MultOperator> {
    a.mult_matrix(g)
}

pub fn trace_residue(a: &ArtinAlgebra, r: &Polynomial) -> Result<Coeff> {
    a.trace_residue(r)
}

pub fn socle(a: &ArtinAlgebra) -> Result<Socle> {
    a.socle()
}

/// Outcome of the Jacobian test for `n` generators in `n` variables.
#[derive(Clone, Debug)]
pub struct JacobianVerdict {
    /// `None` when the quotient has positive dimension.
    pub dim: Option<usize>,
    pub jacobian: Polynomial,
    pub jacobian_in_ideal: bool,
    /// Present when the Jacobian lies in the ideal.
    pub certificate: Option<MembershipCertificate>,
    /// `J · x_i ∈ I` for every variable (finite quotients only).
    pub annihilates_maximal_ideal: Option<bool>,
    pub socle_dim: Option<usize>,
    /// `J̄ ≠ 0` spans a one-dimensional socle (finite quotients only).
    pub socle_generated: Option<bool>,
    /// Set in positive characteristic when no assertion was made.
    pub char_caveat: Option<String>,
    /// Whether the biconditional and socle statement were asserted.
    pub asserted: bool,
}

impl JacobianVerdict {
    pub fn dim_positive(&self) -> bool {
        self.dim.is_none()
    }
}

pub fn jacobian_test(generators: &[Polynomial], limits: &Limits) -> Result<JacobianVerdict> {
    let jd = jacobian_data(generators)?;
    if generators.iter().any(|f| !f.constant_term().is_zero()) {
        return Err(Error::UnitIdeal);
    }
    let sb = StandardBasis::new(generators, limits)?;
    let j = jd.det;
    let (rem, cert) = sb.normal_form(&j)?;
    let in_ideal = rem.is_zero();
    if in_ideal && !cert.verify(&j, generators) {
        return Err(Error::Violation("membership certificate for the Jacobian does not re-multiply".into()));
    }
    let p = sb.ring().field().characteristic();
    let qd = quotient_dimension_of(&sb);
    let mut v = JacobianVerdict {
        dim: qd.dim(),
        jacobian: j.clone(),
        jacobian_in_ideal: in_ideal,
        certificate: in_ideal.then_some(cert),
        annihilates_maximal_ideal: None,
        socle_dim: None,
        socle_generated: None,
        char_caveat: None,
        asserted: false,
    };
    if let Some(dim) = v.dim {
        let a = ArtinAlgebra::new(sb)?;
        let mut ann = true;
        for i in 0..a.ring().n() {
            if !a.reduce(&j.mul(&Polynomial::var(a.ring(), i)))?.is_zero() {
                ann = false;
            }
        }
        let soc = a.socle()?;
        let j_red = a.reduce(&j)?;
        v.annihilates_maximal_ideal = Some(ann);
        v.socle_dim = Some(soc.basis.len());
        v.socle_generated = Some(soc.is_simple && !j_red.is_zero() && ann);
        if p == 0 || dim as u64 % p != 0 {
            v.asserted = true;
            if in_ideal {
                return Err(Error::Violation(format!(
                    "finite quotient (dim {dim}) but the Jacobian lies in the ideal"
                )));
            }
            if v.socle_generated != Some(true) {
                return Err(Error::Violation("the Jacobian does not generate the socle".into()));
            }
        } else {
            v.char_caveat = Some(format!("characteristic {p} divides dim {dim}; no assertion made"));
        }
    } else if p == 0 {
        v.asserted = true;
        if !in_ideal {
            return Err(Error::Violation(
                "positive-dimensional quotient but the Jacobian is not in the ideal".into(),
            ));
        }
    } else {
        v.char_caveat = Some(format!(
            "characteristic {p} with positive-dimensional quotient; no assertion made"
        ));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_system;

    fn alg(text: &str) -> ArtinAlgebra {
        let s = parse_system(text).unwrap();
        build_quotient(&s.generators, &Limits::default()).unwrap()
    }

    #[test]
    fn univariate_cube() {
        let a = alg("ring: Q[x]\nf: x^3");
        assert_eq!(a.dim(), 3);
        assert_eq!(a.trace_residue(&Polynomial::one(a.ring())).unwrap(), a.field().from_int(3));
    }

    #[test]
    fn empty_algebra_for_unit_ideal() {
        let s = parse_system("ring: Q[x]\nf: 1 + x").unwrap();
        let a = build_quotient(&s.generators, &Limits::default()).unwrap();
        assert_eq!(a.dim(), 0);
        assert!(jacobian_test(&s.generators, &Limits::default()).unwrap_err() == Error::UnitIdeal);
    }
}
