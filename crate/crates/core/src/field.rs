//! Exact coefficient fields: the rationals and prime fields.
//!
//! Every coefficient is a `BigRational`. Over a prime field the stored value
//! is always an integer representative in `[0, p)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        Coeff::zero()
    }

    pub fn one(&self) -> Coeff {
        Coeff::one()
    }

    pub fn from_int(&self, i: i64) -> Coeff {
        self.from_bigint(&BigInt::from(i))
    }

    pub fn from_bigint(&self, i: &BigInt) -> Coeff {
        match self {
            Field::Rationals => Coeff::from_integer(i.clone()),
            Field::Prime(p) => Coeff::from_integer(i.mod_floor(&BigInt::from(*p))),
        }
    }

    /// Maps a rational number into the field; `None` when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(&self, r: &BigRational) -> Option<Coeff> {
        match self {
            Field::Rationals => Some(r.clone()),
            Field::Prime(_) => {
                let num = self.from_bigint(r.numer());
                let den = self.from_bigint(r.denom());
                if den.is_zero() {
                    None
                } else {
                    Some(self.mul(&num, &self.inv(&den)))
                }
            }
        }
    }

    fn residue(&self, a: &Coeff) -> u64 {
        a.numer().to_u64().expect("prime field element out of range")
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a + b,
            Field::Prime(p) => {
                let s = (self.residue(a) as u128 + self.residue(b) as u128) % (*p as u128);
                Coeff::from_integer(BigInt::from(s as u64))
            }
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match self {
            Field::Rationals => -a,
            Field::Prime(p) => {
                let r = self.residue(a);
                Coeff::from_integer(BigInt::from(if r == 0 { 0 } else { p - r }))
            }
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a - b,
            Field::Prime(_) => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a * b,
            Field::Prime(p) => {
                let m = (self.residue(a) as u128 * self.residue(b) as u128) % (*p as u128);
                Coeff::from_integer(BigInt::from(m as u64))
            }
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => a.recip(),
            Field::Prime(p) => {
                let (mut base, mut exp, mut acc) = (self.residue(a) as u128, p - 2, 1u128);
                let m = *p as u128;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Coeff::from_integer(BigInt::from(acc as u64))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Coeff, e: u32) -> Coeff {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// The image of the integer `n` (used for multiplicities like `dim`).
    pub fn from_usize(&self, n: usize) -> Coeff {
        self.from_bigint(&BigInt::from(n))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Formats an exact rational as `p/q` (or `p` when integral).
pub fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_negative(r: &BigRational) -> bool {
    r.is_negative()
}
