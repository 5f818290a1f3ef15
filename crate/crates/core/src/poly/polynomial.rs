use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::{fmt_rational, is_negative, Coeff, Field};

/// Ordered variable names over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new(vars: Vec<String>, field: Field) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::InvalidInput("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { vars, field }))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &e) in self.vars.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

/// Sparse multivariate polynomial with no stored zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.n()), c)
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_int(c))
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.n(), i), ring.field().one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Self::term(ring, m, ring.field().one())
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.arity(), ring.n());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// duplicates. Coefficients must already be field elements.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(ring: &Arc<Ring>, it: I) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::one(self.ring.n()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Order (lowest total degree of a term); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// Leading term for the local order (the lowest-degree term, ties broken
    /// reverse lexicographically).
    pub fn local_lead(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| a.0.local_cmp(b.0))
    }

    /// Ecart: total degree minus degree of the local leading monomial.
    pub fn ecart(&self) -> u32 {
        match (self.degree(), self.local_lead()) {
            (Some(d), Some((m, _))) => d - m.degree(),
            _ => 0,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let field = self.ring.field().clone();
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = field.add(old, c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "ring mismatch: {} vs {}",
            self.ring,
            other.ring
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let field = self.field();
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &field.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        self.mul_truncated(other, None)
    }

    /// Product with every term of degree `>= bound` dropped.
    pub fn mul_truncated(&self, other: &Polynomial, bound: Option<u32>) -> Polynomial {
        self.check_ring(other);
        let field = self.field();
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(b) = bound {
                    if ma.degree() + mb.degree() >= b {
                        continue;
                    }
                }
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(old) => *old = field.add(old, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms: acc,
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate(&self, bound: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let field = self.field();
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            out.add_term(Monomial::new(ex), &field.mul(c, &field.from_int(e as i64)));
        }
        out
    }

    /// Linear part (degree-one terms) as coefficients per variable.
    pub fn linear_coeffs(&self) -> Vec<Coeff> {
        (0..self.ring.n())
            .map(|i| self.coeff(&Monomial::var(self.ring.n(), i)))
            .collect()
    }

    /// Substitutes `values[i]` for variable `i`; the values live in `target`.
    pub fn substitute(&self, target: &Arc<Ring>, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.ring.n());
        let mut powers: Vec<Vec<Polynomial>> = values.iter().map(|v| vec![Polynomial::one(target), v.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&values[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Re-expresses the polynomial in `target` by sending variable `i` to
    /// variable `map[i]` of the target ring.
    pub fn rename(&self, target: &Arc<Ring>, map: &[usize]) -> Polynomial {
        let n = target.n();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for (i, &k) in m.exponents().iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial::new(e), c);
        }
        out
    }

    /// Scalar multiple with small coefficients: over `Q` integral with
    /// coprime coefficients and positive local leading coefficient, over
    /// `F_p` monic for the local order.
    pub fn primitive(&self) -> Polynomial {
        let Some((_, lc)) = self.local_lead() else {
            return self.clone();
        };
        match self.field() {
            Field::Prime(_) => {
                let inv = self.field().inv(lc);
                self.scale(&inv)
            }
            Field::Rationals => {
                let mut den = BigInt::one();
                let mut num = BigInt::zero();
                for c in self.terms.values() {
                    den = den.lcm(c.denom());
                    num = num.gcd(c.numer());
                }
                let mut factor = Coeff::new(den, num);
                if is_negative(lc) {
                    factor = -factor;
                }
                self.scale(&factor)
            }
        }
    }

    /// Single-term polynomial as (monomial, coefficient).
    pub fn as_term(&self) -> Option<(&Monomial, &Coeff)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Inverse of a unit modulo `m^bound`. Panics if the constant term is 0.
    pub fn unit_inverse_truncated(&self, bound: u32) -> Polynomial {
        let field = self.field();
        let c0 = self.constant_term();
        assert!(!c0.is_zero(), "not a unit");
        let inv0 = field.inv(&c0);
        // u = c0 (1 - v) with v in m; u^{-1} = c0^{-1} (1 + v + v^2 + ...)
        let v = Polynomial::one(&self.ring).sub(&self.scale(&inv0));
        let mut acc = Polynomial::one(&self.ring);
        let mut power = Polynomial::one(&self.ring);
        for _ in 1..bound.max(1) {
            power = power.mul_truncated(&v, Some(bound));
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        acc.truncate(bound).scale(&inv0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.fmt_monomial(m))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), self.ring.fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}
