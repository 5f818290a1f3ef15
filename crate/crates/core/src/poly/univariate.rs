use std::fmt;

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::{fmt_rational, is_negative, Coeff, Field};

/// Dense univariate polynomial in `t`; `coeffs[k]` multiplies `t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly::new(field, vec![])
    }

    pub fn constant(field: &Field, c: Coeff) -> Self {
        UniPoly::new(field, vec![c])
    }

    /// `c * t^k`
    pub fn monomial(field: &Field, k: usize, c: Coeff) -> Self {
        let mut v = vec![Coeff::zero(); k + 1];
        v[k] = c;
        UniPoly::new(field, v)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// t-adic order; `None` stands for `+∞` (the zero polynomial).
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Coeff::zero();
        let v = (0..n)
            .map(|k| {
                self.field
                    .add(self.coeffs.get(k).unwrap_or(&z), other.coeffs.get(k).unwrap_or(&z))
            })
            .collect();
        UniPoly::new(&self.field, v)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut v = vec![Coeff::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = self.field.add(&v[i + j], &self.field.mul(a, b));
            }
        }
        UniPoly::new(&self.field, v)
    }

    pub fn derivative(&self) -> UniPoly {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| self.field.mul(c, &self.field.from_int(k as i64)))
            .collect();
        UniPoly::new(&self.field, v)
    }

    /// Converts a polynomial in a one-variable ring.
    pub fn from_polynomial(p: &Polynomial) -> Result<UniPoly> {
        if p.ring().n() != 1 {
            return Err(Error::InvalidInput("expected a univariate polynomial".into()));
        }
        let deg = p.degree().unwrap_or(0) as usize;
        let mut v = vec![Coeff::zero(); deg + 1];
        for (m, c) in p.terms() {
            v[m.exponents()[0] as usize] = c.clone();
        }
        Ok(UniPoly::new(p.field(), v))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// A polynomial arc `t ↦ (φ_1(t), …, φ_n(t))` through the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    components: Vec<UniPoly>,
}

impl Arc {
    pub fn new(components: Vec<UniPoly>) -> Result<Arc> {
        if components.is_empty() {
            return Err(Error::InvalidInput("an arc needs at least one component".into()));
        }
        if components.iter().any(|c| c.coeffs.first().map_or(false, |c0| !c0.is_zero())) {
            return Err(Error::InvalidInput("arc components must have zero constant term".into()));
        }
        if components.iter().all(UniPoly::is_zero) {
            return Err(Error::InvalidInput("an arc needs a nonzero component".into()));
        }
        Ok(Arc { components })
    }

    pub fn components(&self) -> &[UniPoly] {
        &self.components
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    /// `ord_t(φ)`: the minimum order of the components.
    pub fn order(&self) -> usize {
        self.components.iter().filter_map(UniPoly::order).min().expect("nonzero arc")
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Substitutes the arc into `p`, returning the composite and its t-adic
/// order (`None` = `+∞`, i.e. the composite vanishes).
pub fn compose_arc(p: &Polynomial, arc: &Arc) -> Result<(UniPoly, Option<usize>)> {
    if p.ring().n() != arc.arity() {
        return Err(Error::Arity {
            expected: p.ring().n(),
            found: arc.arity(),
        });
    }
    let field = p.field();
    let mut powers: Vec<Vec<UniPoly>> = arc
        .components
        .iter()
        .map(|c| vec![UniPoly::constant(field, field.one()), c.clone()])
        .collect();
    let mut out = UniPoly::zero(field);
    for (m, c) in p.terms() {
        let mut t = UniPoly::constant(field, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = powers[i].last().unwrap().mul(&arc.components[i]);
                powers[i].push(next);
            }
            t = t.mul(&powers[i][e as usize]);
        }
        out = out.add(&t);
    }
    let ord = out.order();
    Ok((out, ord))
}
