//! Coefficient rings beyond a field: `A = k[u]` or `A = k[[u]]/(H)` with
//! `H` u-primary. Everything is computed in the flattened local ring
//! `k[[x, u]]` with the relations absorbed into the ideal.

mod probes;
mod quotient;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::local::{quotient_dimension, MembershipCertificate, StandardBasis};
use crate::poly::{jacobian_matrix_wrt, poly_det, Polynomial, Ring, System};

pub use probes::{theorem31_check, theorem33_probe, ProbeStatus, Theorem31Report, Theorem33Report, WitnessCheck};
pub use quotient::{trace_over_a, RelativeQuotient};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    /// No coefficient variables: `A` is the base field.
    Field,
    /// `A = k[u_1..u_q]`, an integral domain.
    DomainPolynomial,
    /// `A = k[[u]]/(H)` with `H` u-primary.
    ArtinianQuotient,
}

impl CoeffKind {
    pub fn is_domain(self) -> bool {
        matches!(self, CoeffKind::Field | CoeffKind::DomainPolynomial)
    }
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoeffKind::Field => "field",
            CoeffKind::DomainPolynomial => "domain-polynomial",
            CoeffKind::ArtinianQuotient => "artinian-quotient",
        })
    }
}

/// Default truncation `(u)^N` used to compute over a polynomial
/// coefficient ring.
pub const DEFAULT_PRECISION: u32 = 6;

#[derive(Clone, Debug)]
pub struct CoeffRingSpec {
    /// Flattened ring: main variables first, then the `u` variables.
    ring: Arc<Ring>,
    main_vars: usize,
    relations: Vec<Polynomial>,
    kind: CoeffKind,
    precision: u32,
}

impl CoeffRingSpec {
    /// `A` is the base field of `ring`.
    pub fn field(ring: &Arc<Ring>) -> Self {
        CoeffRingSpec {
            ring: ring.clone(),
            main_vars: ring.n(),
            relations: Vec::new(),
            kind: CoeffKind::Field,
            precision: DEFAULT_PRECISION,
        }
    }

    /// Coefficient variables are the last `ring.n() - main_vars`; the
    /// relations must only involve them.
    pub fn new(ring: &Arc<Ring>, main_vars: usize, relations: Vec<Polynomial>, limits: &Limits) -> Result<Self> {
        if main_vars == 0 || main_vars > ring.n() {
            return Err(Error::InvalidInput("bad split between main and coefficient variables".into()));
        }
        let relations: Vec<Polynomial> = relations.into_iter().filter(|h| !h.is_zero()).collect();
        if relations
            .iter()
            .any(|h| h.terms().any(|(m, _)| m.exponents()[..main_vars].iter().any(|&e| e > 0)))
        {
            return Err(Error::InvalidInput("relations may only use coefficient variables".into()));
        }
        let mut spec = CoeffRingSpec {
            ring: ring.clone(),
            main_vars,
            relations,
            kind: CoeffKind::Field,
            precision: DEFAULT_PRECISION,
        };
        spec.kind = if main_vars == ring.n() {
            if !spec.relations.is_empty() {
                return Err(Error::InvalidInput("relations without coefficient variables".into()));
            }
            CoeffKind::Field
        } else if spec.relations.is_empty() {
            CoeffKind::DomainPolynomial
        } else {
            let hs = spec.u_relations()?;
            match quotient_dimension(&hs, limits) {
                Ok(d) if d.is_finite() && d.dim() != Some(0) => CoeffKind::ArtinianQuotient,
                Ok(d) if d.dim() == Some(0) => {
                    return Err(Error::InvalidInput("coefficient relations generate the unit ideal".into()))
                }
                Ok(_) => return Err(Error::InvalidInput("coefficient relations are not u-primary".into())),
                Err(e) => return Err(e),
            }
        };
        Ok(spec)
    }

    pub fn from_system(sys: &System, limits: &Limits) -> Result<Self> {
        match &sys.coeff {
            None => Ok(Self::field(&sys.ring)),
            Some(c) => Self::new(&sys.ring, sys.main_vars, c.relations.clone().unwrap_or_default(), limits),
        }
    }

    /// Precision `N` of the truncation `A/(u)^N` for a polynomial ring `A`.
    pub fn with_precision(mut self, n: u32) -> Self {
        self.precision = n.max(1);
        self
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn main_vars(&self) -> usize {
        self.main_vars
    }

    pub fn coeff_vars(&self) -> usize {
        self.ring.n() - self.main_vars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// The ring `k[u]` alone.
    pub fn u_ring(&self) -> Result<Arc<Ring>> {
        if self.coeff_vars() == 0 {
            return Err(Error::InvalidInput("no coefficient variables".into()));
        }
        Ring::new(self.ring.vars()[self.main_vars..].to_vec(), self.ring.field().clone())
    }

    /// Relations re-expressed in `k[u]`.
    pub fn u_relations(&self) -> Result<Vec<Polynomial>> {
        let ur = self.u_ring()?;
        Ok(self.relations.iter().map(|h| self.to_u(h, &ur)).collect())
    }

    fn to_u(&self, p: &Polynomial, ur: &Arc<Ring>) -> Polynomial {
        let values: Vec<Polynomial> = (0..self.ring.n())
            .map(|i| {
                if i < self.main_vars {
                    Polynomial::zero(ur)
                } else {
                    Polynomial::var(ur, i - self.main_vars)
                }
            })
            .collect();
        p.substitute(ur, &values)
    }

    /// Relations that make `A` Artinian: `H` itself, or `(u)^N` for a
    /// polynomial ring.
    pub(crate) fn artinian_relations(&self) -> Vec<Polynomial> {
        match self.kind {
            CoeffKind::Field => Vec::new(),
            CoeffKind::ArtinianQuotient => self.relations.clone(),
            CoeffKind::DomainPolynomial => crate::poly::Monomial::of_degree(self.coeff_vars(), self.precision)
                .into_iter()
                .map(|m| {
                    let mut e = vec![0u32; self.main_vars];
                    e.extend_from_slice(m.exponents());
                    Polynomial::monomial(&self.ring, crate::poly::Monomial::new(e))
                })
                .collect(),
        }
    }

    /// `F ∪ H` in the flattened ring.
    pub fn flattened(&self, generators: &[Polynomial]) -> Vec<Polynomial> {
        let mut out = generators.to_vec();
        out.extend(self.relations.iter().cloned());
        out
    }

    /// `J_X = det(∂f_i/∂x_j)` over the main variables only.
    pub fn jacobian(&self, generators: &[Polynomial]) -> Result<Polynomial> {
        if generators.len() != self.main_vars {
            return Err(Error::Arity {
                expected: self.main_vars,
                found: generators.len(),
            });
        }
        let vars: Vec<usize> = (0..self.main_vars).collect();
        Ok(poly_det(&jacobian_matrix_wrt(generators, &vars)))
    }
}

/// Decides `g ∈ (F)·A[[x]]` through the flattened ideal `F ∪ H`; the
/// certificate re-multiplies against those generators.
pub fn relative_member(
    g: &Polynomial,
    generators: &[Polynomial],
    a: &CoeffRingSpec,
    limits: &Limits,
) -> Result<(bool, MembershipCertificate)> {
    let flat = a.flattened(generators);
    let sb = StandardBasis::new(&flat, limits)?;
    let (r, cert) = sb.normal_form(g)?;
    let inside = r.is_zero();
    if inside && !cert.verify(g, &flat) {
        return Err(Error::Violation("relative membership certificate does not re-multiply".into()));
    }
    Ok((inside, cert))
}
