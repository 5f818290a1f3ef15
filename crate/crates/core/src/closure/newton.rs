use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{fmt_rational, Field};
use crate::linalg::Matrix;
use crate::poly::Polynomial;

/// Largest ambient dimension and generator count handled by the exact
/// vertex enumeration.
pub const MAX_VARS: usize = 4;
pub const MAX_GENERATORS: usize = 12;

/// A rational number or `+∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(BigRational),
    Infinite,
}

impl Extended {
    pub fn int(k: i64) -> Self {
        Extended::Finite(BigRational::from_integer(k.into()))
    }

    pub fn ratio(p: usize, q: usize) -> Self {
        Extended::Finite(BigRational::new(p.into(), q.into()))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Extended::Finite(q) => Some(q),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(q) => f.write_str(&fmt_rational(q)),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

/// The inequality `⟨normal, v⟩ >= rhs`, with a primitive nonnegative
/// integer normal and positive right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Facet {
    pub fn value(&self, a: &[u32]) -> BigInt {
        self.normal.iter().zip(a).map(|(l, &x)| l * BigInt::from(x)).sum()
    }

    /// `3*x + 2*y >= 6` style rendering.
    pub fn display_with(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .normal
            .iter()
            .zip(vars)
            .filter(|(l, _)| !l.is_zero())
            .map(|(l, v)| if l.is_one() { v.clone() } else { format!("{l}*{v}") })
            .collect();
        format!("{} >= {}", parts.join(" + "), self.rhs)
    }
}

/// `NP(E) = conv(E) + R^n_{>=0}` given by its non-coordinate facets.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    n: usize,
    exponents: Vec<Vec<u32>>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    /// Builds the polyhedron from exponent vectors. Facets are the
    /// vertices of the blocker `{l >= 0 : ⟨l, e⟩ >= 1 for e in E}`.
    pub fn new(n: usize, exponents: Vec<Vec<u32>>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidInput("no exponents".into()));
        }
        if let Some(e) = exponents.iter().find(|e| e.len() != n) {
            return Err(Error::Arity {
                expected: n,
                found: e.len(),
            });
        }
        if exponents.iter().any(|e| e.iter().all(|&x| x == 0)) {
            return Err(Error::UnitIdeal);
        }
        let exponents = minimal(exponents);
        if n > MAX_VARS || exponents.len() > MAX_GENERATORS {
            return Err(Error::Inconclusive(format!(
                "Newton polyhedron with {n} variables and {} generators exceeds the caps ({MAX_VARS}, {MAX_GENERATORS})",
                exponents.len()
            )));
        }
        let facets = blocker_vertices(n, &exponents)
            .into_iter()
            .map(|l| primitive_facet(&l))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Ok(NewtonPolyhedron { n, exponents, facets })
    }

    /// Newton polyhedron of an ideal generated by monomials (coefficients
    /// are ignored; each generator must be a single term).
    pub fn from_generators(generators: &[Polynomial]) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidInput("no generators".into()))?;
        let ring = first.ring();
        let mut exps = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            let Some((m, _)) = g.as_term() else {
                return Err(Error::NonMonomial(g.to_string()));
            };
            exps.push(m.exponents().to_vec());
        }
        if exps.is_empty() {
            return Err(Error::InvalidInput("the zero ideal has no Newton polyhedron".into()));
        }
        Self::new(ring.n(), exps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generator exponents.
    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// `v̄(x^a) = min ⟨l, a⟩ / c` over the facets.
    pub fn samuel(&self, a: &[u32]) -> BigRational {
        self.facets
            .iter()
            .map(|f| BigRational::new(f.value(a), f.rhs.clone()))
            .min()
            .expect("a nonempty exponent set has a facet")
    }

    /// `x^a ∈ closure(I^θ)`.
    pub fn contains(&self, a: &[u32], theta: &BigRational) -> bool {
        self.samuel(a) >= *theta
    }

    /// Minimal lattice points of the polyhedron, i.e. the monomial
    /// generators of the integral closure. A minimal point never exceeds
    /// the largest generator exponent in any coordinate, so the search box
    /// is finite.
    pub fn closure_generators(&self) -> Vec<Vec<u32>> {
        let bounds: Vec<u32> = (0..self.n)
            .map(|i| self.exponents.iter().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let one = BigRational::one();
        let mut out = Vec::new();
        let mut a = vec![0u32; self.n];
        loop {
            if self.contains(&a, &one) {
                let minimal = (0..self.n).all(|i| {
                    if a[i] == 0 {
                        return true;
                    }
                    let mut b = a.clone();
                    b[i] -= 1;
                    !self.contains(&b, &one)
                });
                if minimal {
                    out.push(a.clone());
                }
            }
            let mut i = 0;
            loop {
                if i == self.n {
                    out.sort_by(|x, y| deg_lex(x, y));
                    return out;
                }
                if a[i] < bounds[i] {
                    a[i] += 1;
                    break;
                }
                a[i] = 0;
                i += 1;
            }
        }
    }

    /// True when every lattice point of the polyhedron is divisible by a
    /// generator exponent, i.e. the monomial ideal is integrally closed.
    pub fn is_integrally_closed(&self) -> bool {
        self.closure_generators()
            .iter()
            .all(|a| self.exponents.iter().any(|e| e.iter().zip(a).all(|(x, y)| x <= y)))
    }
}

fn deg_lex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

fn minimal(mut exps: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    exps.sort_by(|x, y| deg_lex(x, y));
    exps.dedup();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for e in exps {
        if !out.iter().any(|d| d.iter().zip(&e).all(|(x, y)| x <= y)) {
            out.push(e);
        }
    }
    out
}

fn blocker_vertices(n: usize, exps: &[Vec<u32>]) -> Vec<Vec<BigRational>> {
    let field = Field::Rationals;
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = exps
        .iter()
        .map(|e| (e.iter().map(|&x| BigRational::from_integer(x.into())).collect(), BigRational::one()))
        .collect();
    for i in 0..n {
        let mut r = vec![BigRational::zero(); n];
        r[i] = BigRational::one();
        rows.push((r, BigRational::zero()));
    }
    let mut found = BTreeSet::new();
    for choice in combinations(rows.len(), n) {
        let a = Matrix::from_rows(&field, choice.iter().map(|&k| rows[k].0.clone()).collect());
        let b: Vec<BigRational> = choice.iter().map(|&k| rows[k].1.clone()).collect();
        let Some(inv) = a.inverse() else {
            continue;
        };
        let l = inv.mul_vec(&b);
        let feasible = rows.iter().all(|(r, c)| {
            let v: BigRational = r.iter().zip(&l).map(|(x, y)| x * y).sum();
            v >= *c
        });
        if feasible {
            found.insert(l);
        }
    }
    found.into_iter().collect()
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    go(0, m, k, &mut cur, &mut out);
    out
}

/// Scales the vertex `l` (facet `⟨l, v⟩ >= 1`) to a primitive integer row.
fn primitive_facet(l: &[BigRational]) -> Facet {
    let den = l.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let normal: Vec<BigInt> = l.iter().map(|q| (q * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = normal.iter().fold(den.clone(), |acc, x| acc.gcd(x));
    debug_assert!(normal.iter().all(|x| !x.is_negative()));
    Facet {
        normal: normal.into_iter().map(|x| x / &g).collect(),
        rhs: den / g,
    }
}

/// `v̄_I(u)` for a monomial ideal `I`: the minimum over the terms of `u`
/// (`+∞` for `u = 0`).
pub fn samuel_monomial(generators: &[Polynomial], u: &Polynomial) -> Result<Extended> {
    let np = NewtonPolyhedron::from_generators(generators)?;
    if u.ring().n() != np.n() {
        return Err(Error::Arity {
            expected: np.n(),
            found: u.ring().n(),
        });
    }
    Ok(u.terms()
        .map(|(m, _)| np.samuel(m.exponents()))
        .min()
        .map_or(Extended::Infinite, Extended::Finite))
}
