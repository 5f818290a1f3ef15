//! Quotient dimension, containment index and ideal orders.

use super::mora::{local_desc, StandardBasis};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    /// `dim_k k[[x]]/I` with its standard monomials in descending local order.
    Finite {
        dim: usize,
        standard_monomials: Vec<Monomial>,
    },
    /// Positive Krull dimension: variable `witness` has no pure power among
    /// the leading monomials.
    Infinite { witness: usize },
}

impl QuotientDim {
    pub fn is_finite(&self) -> bool {
        matches!(self, QuotientDim::Finite { .. })
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            QuotientDim::Finite { dim, .. } => Some(*dim),
            QuotientDim::Infinite { .. } => None,
        }
    }
}

pub fn quotient_dimension_of(sb: &StandardBasis) -> QuotientDim {
    let n = sb.ring().n();
    let leads = sb.lead_monomials();
    if leads.iter().any(Monomial::is_one) {
        return QuotientDim::Finite {
            dim: 0,
            standard_monomials: Vec::new(),
        };
    }
    let mut caps = vec![u32::MAX; n];
    for m in &leads {
        if let Some(i) = m.pure_power_var() {
            caps[i] = caps[i].min(m.exponents()[i]);
        }
    }
    if let Some(w) = caps.iter().position(|&c| c == u32::MAX) {
        return QuotientDim::Infinite { witness: w };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, caps: &[u32], cur: &mut Vec<u32>, sb: &StandardBasis, out: &mut Vec<Monomial>) {
        if i == caps.len() {
            let m = Monomial::new(cur.clone());
            if sb.is_standard(&m) {
                out.push(m);
            }
            return;
        }
        for e in 0..caps[i] {
            cur[i] = e;
            rec(i + 1, caps, cur, sb, out);
        }
        cur[i] = 0;
    }
    rec(0, &caps, &mut cur, sb, &mut out);
    out.sort_by(local_desc);
    QuotientDim::Finite {
        dim: out.len(),
        standard_monomials: out,
    }
}

pub fn quotient_dimension(generators: &[Polynomial], limits: &Limits) -> Result<QuotientDim> {
    Ok(quotient_dimension_of(&StandardBasis::uncertified(generators, limits)?))
}

/// Least `s` with `m^s ⊂ I`: one more than the top degree of a standard
/// monomial (all higher monomials are leading monomials, hence in `I`).
pub fn containment_index_of(sb: &StandardBasis) -> Result<u32> {
    match quotient_dimension_of(sb) {
        QuotientDim::Finite {
            standard_monomials, ..
        } => Ok(standard_monomials.iter().map(|m| m.degree() + 1).max().unwrap_or(0)),
        QuotientDim::Infinite { witness } => {
            Err(Error::InfiniteQuotient(sb.ring().vars()[witness].clone()))
        }
    }
}

pub fn containment_index(generators: &[Polynomial], limits: &Limits) -> Result<u32> {
    containment_index_of(&StandardBasis::uncertified(generators, limits)?)
}

/// Generators of `I^k`: all products of `k` generators (with repetition).
pub fn power_generators(generators: &[Polynomial], k: u32) -> Vec<Polynomial> {
    let gens: Vec<&Polynomial> = generators.iter().filter(|g| !g.is_zero()).collect();
    let ring = generators[0].ring();
    let mut layer = vec![(0usize, Polynomial::one(ring))];
    for _ in 0..k {
        let mut next = Vec::new();
        for (start, p) in &layer {
            for (i, g) in gens.iter().enumerate().skip(*start) {
                next.push((i, p.mul(g)));
            }
        }
        layer = next;
    }
    layer.into_iter().map(|(_, p)| p).collect()
}

/// `ord_I(g)`: the largest `k <= cap` with `g ∈ I^k` (`cap` for `g = 0`).
pub fn ideal_order(g: &Polynomial, generators: &[Polynomial], cap: u32, limits: &Limits) -> Result<u32> {
    let Some(og) = g.order() else {
        return Ok(cap);
    };
    let ord_i = generators.iter().filter_map(Polynomial::order).min();
    let Some(ord_i) = ord_i else {
        return Ok(0);
    };
    let sb = StandardBasis::uncertified(generators, limits)?;
    let s = containment_index_of(&sb).ok();
    let mut best = 0;
    for k in 1..=cap {
        if ord_i > 0 && og < k * ord_i {
            break;
        }
        // m^{sk} ⊂ (m^s)^k ⊂ I^k
        let inside = match s {
            Some(s) if s > 0 && og >= s * k => true,
            _ if k == 1 => sb.contains(g)?,
            _ => StandardBasis::uncertified(&power_generators(generators, k), limits)?.contains(g)?,
        };
        if !inside {
            break;
        }
        best = k;
    }
    Ok(best)
}

/// Containment index (when the quotient is finite) and `ord_I(g)`.
pub fn ideal_orders(
    generators: &[Polynomial],
    g: Option<&Polynomial>,
    cap: u32,
    limits: &Limits,
) -> Result<(Option<u32>, Option<u32>)> {
    let s = match containment_index(generators, limits) {
        Ok(s) => Some(s),
        Err(Error::InfiniteQuotient(_)) => None,
        Err(e) => return Err(e),
    };
    let o = match g {
        Some(g) => Some(ideal_order(g, generators, cap, limits)?),
        None => None,
    };
    Ok((s, o))
}
