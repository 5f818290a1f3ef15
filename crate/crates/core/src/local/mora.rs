//! Mora's tangent-cone normal form and standard bases for the local order.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::limits::{Budget, Limits};
use crate::poly::{Monomial, Polynomial, Ring};

/// Identity `unit · g = Σ cofactors_i · f_i + remainder` relative to the
/// original generators `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub unit: Polynomial,
    pub cofactors: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl MembershipCertificate {
    /// Re-multiplies the identity exactly.
    pub fn verify(&self, g: &Polynomial, generators: &[Polynomial]) -> bool {
        if self.unit.constant_term().is_zero() || self.cofactors.len() != generators.len() {
            return false;
        }
        let mut rhs = self.remainder.clone();
        for (a, f) in self.cofactors.iter().zip(generators) {
            rhs = rhs.add(&a.mul(f));
        }
        self.unit.mul(g) == rhs
    }
}

/// A basis element `poly` with `unit · poly = Σ cofactors_i f_i`.
#[derive(Clone, Debug)]
pub struct Element {
    pub poly: Polynomial,
    pub unit: Polynomial,
    pub cofactors: Vec<Polynomial>,
    lm: Monomial,
    lc: Coeff,
    ecart: u32,
}

impl Element {
    fn new(poly: Polynomial, unit: Polynomial, cofactors: Vec<Polynomial>) -> Self {
        let (lm, lc) = poly.local_lead().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let ecart = poly.ecart();
        Element {
            poly,
            unit,
            cofactors,
            lm,
            lc,
            ecart,
        }
    }

    pub fn lead_monomial(&self) -> &Monomial {
        &self.lm
    }
}

/// Standard basis of `(f_1..f_k)·k[[x]]` for the local order, with
/// certificates relative to the generators.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    elements: Vec<Element>,
    limits: Limits,
    certified: bool,
    /// `D` with `m^D ⊂ I` when the computation was truncated there.
    corner: Option<u32>,
}

/// Running state of a reduction: `w · h = u · g − Σ a_i f_i`.
struct State {
    h: Polynomial,
    w: Polynomial,
    u: Polynomial,
    a: Vec<Polynomial>,
}

/// Previously seen intermediate `h` with its own certificate.
struct History {
    h: Polynomial,
    lm: Monomial,
    lc: Coeff,
    ecart: u32,
    w: Polynomial,
    u: Polynomial,
    a: Vec<Polynomial>,
}

/// With `corner = Some(D)` (only when not tracking) every term of degree
/// `>= D` is dropped, since `m^D ⊂ I`; plain division then terminates and
/// no history is needed.
fn mora_reduce(
    g: &Polynomial,
    elements: &[Element],
    k: usize,
    track: bool,
    corner: Option<u32>,
    budget: &mut Budget,
) -> Result<State> {
    debug_assert!(!(track && corner.is_some()));
    let ring = g.ring();
    let zero = Polynomial::zero(ring);
    let one = Polynomial::one(ring);
    let start = match corner {
        Some(d) => g.truncate(d),
        None => g.clone(),
    };
    let mut st = State {
        h: if track { start } else { start.primitive() },
        w: one.clone(),
        u: one,
        a: vec![zero; k],
    };
    let mut history: Vec<History> = Vec::new();
    let field = ring.field().clone();
    loop {
        let Some((lm, lc)) = st.h.local_lead().map(|(m, c)| (m.clone(), c.clone())) else {
            break;
        };
        // Smallest ecart wins; basis elements come before history, older first.
        let mut best: Option<(usize, u32)> = None;
        let candidates = elements
            .iter()
            .map(|e| (&e.lm, e.ecart))
            .chain(history.iter().map(|t| (&t.lm, t.ecart)));
        for (idx, (tlm, te)) in candidates.enumerate() {
            if tlm.divides(&lm) && best.map_or(true, |(_, be)| te < be) {
                best = Some((idx, te));
            }
        }
        let Some((idx, te)) = best else {
            break;
        };
        budget.tick()?;
        let h_ecart = st.h.ecart();
        if corner.is_none() && te > h_ecart {
            let (w, u, a) = if track {
                (st.w.clone(), st.u.clone(), st.a.clone())
            } else {
                (st.w.clone(), st.u.clone(), Vec::new())
            };
            history.push(History {
                h: st.h.clone(),
                lm: lm.clone(),
                lc: lc.clone(),
                ecart: h_ecart,
                w,
                u,
                a,
            });
        }
        if idx < elements.len() {
            let e = &elements[idx];
            let c = field.div(&lc, &e.lc);
            let m = e.lm.quotient_of(&lm);
            st.h = st.h.sub(&e.poly.mul_term(&m, &c));
            if !track {
                st.h = match corner {
                    Some(d) => st.h.truncate(d),
                    None => st.h,
                }
                .primitive();
                continue;
            }
            let cmw = st.w.mul_term(&m, &c);
            let unit_one = e.unit.is_one();
            // A' = W_t A + c m w C_t, u' = W_t u, w' = W_t w
            for (ai, ci) in st.a.iter_mut().zip(&e.cofactors) {
                let base = if unit_one { ai.clone() } else { e.unit.mul(ai) };
                *ai = if ci.is_zero() { base } else { base.add(&cmw.mul(ci)) };
            }
            if !unit_one {
                st.u = e.unit.mul(&st.u);
                st.w = e.unit.mul(&st.w);
            }
        } else {
            let t = &history[idx - elements.len()];
            let c = field.div(&lc, &t.lc);
            let m = t.lm.quotient_of(&lm);
            st.h = st.h.sub(&t.h.mul_term(&m, &c));
            if !track {
                st.h = st.h.primitive();
                continue;
            }
            let cmw = st.w.mul_term(&m, &c);
            // A' = W_t A − c m w A_t, u' = W_t u − c m w U_t, w' = W_t w
            let mut a = Vec::with_capacity(k);
            for (ai, ti) in st.a.iter().zip(&t.a) {
                a.push(t.w.mul(ai).sub(&cmw.mul(ti)));
            }
            st.a = a;
            st.u = t.w.mul(&st.u).sub(&cmw.mul(&t.u));
            st.w = t.w.mul(&st.w);
        }
    }
    Ok(st)
}

impl StandardBasis {
    /// Standard basis whose elements carry certificates.
    pub fn new(generators: &[Polynomial], limits: &Limits) -> Result<Self> {
        Self::build(generators, limits, true)
    }

    /// Standard basis without certificates: enough for membership tests and
    /// leading-ideal data, and much cheaper on large inputs.
    pub fn uncertified(generators: &[Polynomial], limits: &Limits) -> Result<Self> {
        Self::build(generators, limits, false)
    }

    fn build(generators: &[Polynomial], limits: &Limits, track: bool) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidInput("no generators".into()));
        };
        let ring = first.ring().clone();
        if generators.iter().any(|g| g.ring().vars() != ring.vars()) {
            return Err(Error::InvalidInput("generators live in different rings".into()));
        }
        let k = generators.len();
        let zero = Polynomial::zero(&ring);
        let mut elements: Vec<Element> = Vec::new();
        for (i, f) in generators.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let mut cof = vec![zero.clone(); k];
            cof[i] = Polynomial::one(&ring);
            if !track {
                cof.clear();
            }
            elements.push(Element::new(f.clone(), Polynomial::one(&ring), cof));
        }
        let mut elements = prune_terms(elements);
        let n = ring.n();
        let mut corner = None;
        if !track {
            if let Some(d) = corner_of(&elements) {
                corner = Some(d);
                elements = truncate_elements(&elements, d, n);
            }
        }
        let mut pairs = all_pairs(&elements);
        let mut budget = limits.budget("standard basis computation");
        let field = ring.field().clone();
        while !pairs.is_empty() {
            // Lowest lcm degree first, then creation order.
            let pick = (0..pairs.len())
                .min_by_key(|&p| {
                    let (i, j) = pairs[p];
                    (elements[i].lm.lcm(&elements[j].lm).degree(), j, i)
                })
                .unwrap();
            let (i, j) = pairs.remove(pick);
            budget.tick()?;
            let (p, q) = (&elements[i], &elements[j]);
            let l = p.lm.lcm(&q.lm);
            let mp = p.lm.quotient_of(&l);
            let mq = q.lm.quotient_of(&l);
            let cp = field.inv(&p.lc);
            let cq = field.inv(&q.lc);
            let mut s = p.poly.mul_term(&mp, &cp).sub(&q.poly.mul_term(&mq, &cq));
            if let Some(d) = corner {
                s = s.truncate(d);
            }
            if s.is_zero() {
                continue;
            }
            if !track {
                let st = mora_reduce(&s, &elements, 0, false, corner, &mut budget)?;
                if st.h.is_zero() {
                    continue;
                }
                let new = elements.len();
                elements.push(Element::new(st.h, Polynomial::one(&ring), Vec::new()));
                pairs.extend(new_pairs(&elements, new));
                if let Some(d) = corner_of(&elements) {
                    if corner.map_or(true, |c| d < c) {
                        corner = Some(d);
                        elements = truncate_elements(&elements, d, n);
                        pairs = all_pairs(&elements);
                    }
                }
                continue;
            }
            // W_s s = C_s f with W_s = W_p W_q.
            let ws = p.unit.mul(&q.unit);
            let wq_mp = q.unit.mul_term(&mp, &cp);
            let wp_mq = p.unit.mul_term(&mq, &cq);
            let cs: Vec<Polynomial> = p
                .cofactors
                .iter()
                .zip(&q.cofactors)
                .map(|(a, b)| wq_mp.mul(a).sub(&wp_mq.mul(b)))
                .collect();
            let st = mora_reduce(&s, &elements, k, true, None, &mut budget)?;
            if st.h.is_zero() {
                continue;
            }
            let unit = ws.mul(&st.w);
            let cof = cs
                .iter()
                .zip(&st.a)
                .map(|(c, a)| st.u.mul(c).sub(&ws.mul(a)))
                .collect();
            let new = elements.len();
            elements.push(Element::new(st.h, unit, cof));
            pairs.extend(new_pairs(&elements, new));
        }
        let mut keep: Vec<Element> = Vec::new();
        for (idx, e) in elements.iter().enumerate() {
            let redundant = elements.iter().enumerate().any(|(jdx, o)| {
                jdx != idx && o.lm.divides(&e.lm) && (o.lm != e.lm || jdx < idx)
            });
            if !redundant {
                keep.push(e.clone());
            }
        }
        Ok(StandardBasis {
            ring,
            generators: generators.to_vec(),
            elements: keep,
            limits: limits.clone(),
            certified: track,
            corner,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Same basis with different resource caps.
    pub fn with_limits(mut self, limits: &Limits) -> Self {
        self.limits = limits.clone();
        self
    }

    /// Minimal generators of the leading-monomial ideal.
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|e| e.lm.clone()).collect()
    }

    /// True when no leading monomial divides `m`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.elements.iter().any(|e| e.lm.divides(m))
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|e| e.lm.is_one())
    }

    /// Mora weak normal form. The remainder is zero iff `g ∈ I·k[[x]]`;
    /// otherwise its local leading monomial is standard.
    pub fn normal_form(&self, g: &Polynomial) -> Result<(Polynomial, MembershipCertificate)> {
        if g.ring().vars() != self.ring.vars() {
            return Err(Error::InvalidInput("polynomial is in a different ring".into()));
        }
        if !self.certified {
            return Err(Error::InvalidInput("standard basis was built without certificates".into()));
        }
        let mut budget = self.limits.budget("normal form");
        let st = mora_reduce(g, &self.elements, self.generators.len(), true, None, &mut budget)?;
        let remainder = if st.h.is_zero() { st.h } else { st.w.mul(&st.h) };
        let cert = MembershipCertificate {
            unit: st.u,
            cofactors: st.a,
            remainder: remainder.clone(),
        };
        Ok((remainder, cert))
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        if g.ring().vars() != self.ring.vars() {
            return Err(Error::InvalidInput("polynomial is in a different ring".into()));
        }
        let mut budget = self.limits.budget("normal form");
        Ok(mora_reduce(g, &self.elements, 0, false, self.corner, &mut budget)?
            .h
            .is_zero())
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }
}

/// Critical pairs; two single-term elements have a zero S-polynomial.
fn all_pairs(elements: &[Element]) -> Vec<(usize, usize)> {
    (0..elements.len()).flat_map(|j| new_pairs(elements, j)).collect()
}

fn new_pairs(elements: &[Element], j: usize) -> Vec<(usize, usize)> {
    let term = |e: &Element| e.poly.num_terms() == 1;
    (0..j)
        .filter(|&i| !(term(&elements[i]) && term(&elements[j])))
        .map(|i| (i, j))
        .collect()
}

/// Drops single-term elements that are multiples of another single-term
/// element; they add nothing to the ideal.
fn prune_terms(elements: Vec<Element>) -> Vec<Element> {
    let term = |e: &Element| e.poly.num_terms() == 1;
    let mut out = Vec::with_capacity(elements.len());
    for (idx, e) in elements.iter().enumerate() {
        let redundant = term(e)
            && elements.iter().enumerate().any(|(jdx, o)| {
                jdx != idx && term(o) && o.lm.divides(&e.lm) && (o.lm != e.lm || jdx < idx)
            });
        if !redundant {
            out.push(e.clone());
        }
    }
    out
}

/// Least `D` such that every monomial of degree `D` is divisible by a
/// leading monomial (then `m^D ⊂ I` by Nakayama).
fn corner_of(elements: &[Element]) -> Option<u32> {
    let n = elements.first()?.lm.arity();
    let mut caps = vec![u32::MAX; n];
    for e in elements {
        if e.lm.is_one() {
            return Some(0);
        }
        if let Some(i) = e.lm.pure_power_var() {
            caps[i] = caps[i].min(e.lm.exponents()[i]);
        }
    }
    if caps.contains(&u32::MAX) {
        return None;
    }
    // Standard monomials lie in the box below the pure powers.
    let mut best = 0;
    let mut cur = vec![0u32; n];
    loop {
        let m = Monomial::new(cur.clone());
        if !elements.iter().any(|e| e.lm.divides(&m)) {
            best = best.max(m.degree() + 1);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Some(best);
            }
            cur[i] += 1;
            if cur[i] < caps[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Truncates every element below degree `d`, drops those that vanish, and
/// adds the degree-`d` monomials not yet covered (they lie in `I`).
fn truncate_elements(elements: &[Element], d: u32, n: usize) -> Vec<Element> {
    let ring = elements[0].poly.ring().clone();
    let mut out: Vec<Element> = elements
        .iter()
        .filter(|e| e.lm.degree() < d)
        .map(|e| Element::new(e.poly.truncate(d).primitive(), e.unit.clone(), Vec::new()))
        .collect();
    for m in Monomial::of_degree(n, d) {
        if !out.iter().any(|e| e.lm.divides(&m)) {
            out.push(Element::new(Polynomial::monomial(&ring, m), Polynomial::one(&ring), Vec::new()));
        }
    }
    out
}

/// Comparator sorting monomials in descending local order.
pub(crate) fn local_desc(a: &Monomial, b: &Monomial) -> Ordering {
    b.local_cmp(a)
}
