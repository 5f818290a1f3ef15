//! Full reduction in the truncated ring `k[x]/m^N`.
//!
//! When `m^N ⊂ I` every monomial of degree `>= N` is a leading monomial, so
//! fully reducing modulo `m^N` lands on the unique representative supported
//! on standard monomials.


use super::mora::StandardBasis;
use crate::error::{Error, Result};
use crate::limits::Budget;
use crate::poly::Polynomial;

fn pick(sb: &StandardBasis, m: &crate::poly::Monomial) -> Option<usize> {
    sb.elements().iter().position(|e| e.lead_monomial().divides(m))
}

/// Reduces `g` modulo `I + m^bound`; the result is supported on standard
/// monomials of degree `< bound`.
pub fn reduce_truncated(sb: &StandardBasis, g: &Polynomial, bound: u32) -> Result<Polynomial> {
    let mut budget = sb.limits().budget("truncated reduction");
    let field = g.field().clone();
    let mut h = g.truncate(bound);
    let mut r = Polynomial::zero(g.ring());
    while let Some((m, c)) = h.local_lead().map(|(m, c)| (m.clone(), c.clone())) {
        budget.tick()?;
        match pick(sb, &m) {
            Some(idx) => {
                let e = &sb.elements()[idx];
                let (lm, lc) = e.poly.local_lead().unwrap();
                let q = lm.quotient_of(&m);
                let t = e.poly.truncate(bound - q.degree()).mul_term(&q, &field.div(&c, lc));
                h = h.sub(&t);
            }
            None => {
                h.add_term(m.clone(), &field.neg(&c));
                r.add_term(m, &c);
            }
        }
    }
    Ok(r)
}

/// Reduction modulo `m^bound` that also records cofactors with respect to
/// the original generators: `g ≡ r + Σ a_i f_i (mod m^bound)`.
#[derive(Clone, Debug)]
pub struct TrackedReducer<'a> {
    sb: &'a StandardBasis,
    bound: u32,
    /// Per basis element, `W^{-1} C` truncated below `bound`.
    expressions: Vec<Vec<Polynomial>>,
}

impl<'a> TrackedReducer<'a> {
    /// Requires a basis built with certificates.
    pub fn new(sb: &'a StandardBasis, bound: u32) -> Result<Self> {
        if !sb.is_certified() {
            return Err(Error::InvalidInput("tracked reduction needs a certified standard basis".into()));
        }
        let expressions = crate::par::map(sb.limits().exec, sb.elements(), |e| {
            let inv = e.unit.unit_inverse_truncated(bound);
            e.cofactors
                .iter()
                .map(|c| inv.mul_truncated(c, Some(bound)))
                .collect()
        });
        Ok(TrackedReducer {
            sb,
            bound,
            expressions,
        })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn reduce(&self, g: &Polynomial) -> Result<(Polynomial, Vec<Polynomial>)> {
        let mut budget: Budget = self.sb.limits().budget("tracked reduction");
        let bound = self.bound;
        let field = g.field().clone();
        let k = self.sb.generators().len();
        let mut a = vec![Polynomial::zero(g.ring()); k];
        let mut h = g.truncate(bound);
        let mut r = Polynomial::zero(g.ring());
        while let Some((m, c)) = h.local_lead().map(|(m, c)| (m.clone(), c.clone())) {
            budget.tick()?;
            match pick(self.sb, &m) {
                Some(idx) => {
                    let e = &self.sb.elements()[idx];
                    let (lm, lc) = e.poly.local_lead().unwrap();
                    let q = lm.quotient_of(&m);
                    let coef = field.div(&c, lc);
                    let room = bound - q.degree();
                    h = h.sub(&e.poly.truncate(room).mul_term(&q, &coef));
                    for (ai, x) in a.iter_mut().zip(&self.expressions[idx]) {
                        if !x.is_zero() {
                            *ai = ai.add(&x.truncate(room).mul_term(&q, &coef));
                        }
                    }
                }
                None => {
                    h.add_term(m.clone(), &field.neg(&c));
                    r.add_term(m, &c);
                }
            }
        }
        debug_assert!(a.iter().all(|x| x.degree().map_or(true, |d| d < bound)));
        Ok((r, a))
    }
}
