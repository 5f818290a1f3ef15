use std::cmp::Ordering;

/// Exponent vector. `Ord` is graded lexicographic (storage and display order);
/// the local order used for standard bases is [`Monomial::local_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// `Some(i)` when the monomial is `x_i^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Anti-graded reverse lexicographic comparison: lower total degree is
    /// larger, equal degrees are broken by the last differing exponent
    /// (smaller exponent is larger). `1` is the maximum.
    pub fn local_cmp(&self, other: &Monomial) -> Ordering {
        match other.degree().cmp(&self.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    /// All monomials in `n` variables of total degree exactly `d`, in
    /// descending local order.
    pub fn of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.local_cmp(a));
        out
    }

    /// All monomials of total degree `< d`, in descending local order.
    pub fn below_degree(n: usize, d: u32) -> Vec<Monomial> {
        (0..d).flat_map(|k| Monomial::of_degree(n, k)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_order_basics() {
        let x = Monomial::new(vec![1, 0]);
        let y = Monomial::new(vec![0, 1]);
        let one = Monomial::one(2);
        assert_eq!(one.local_cmp(&x), Ordering::Greater);
        assert_eq!(x.local_cmp(&y), Ordering::Greater);
        let x2 = Monomial::new(vec![2, 0]);
        let xy = Monomial::new(vec![1, 1]);
        let y2 = Monomial::new(vec![0, 2]);
        assert_eq!(x2.local_cmp(&xy), Ordering::Greater);
        assert_eq!(xy.local_cmp(&y2), Ordering::Greater);
        assert_eq!(y.local_cmp(&x2), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration() {
        let m = Monomial::of_degree(2, 2);
        assert_eq!(
            m,
            vec![
                Monomial::new(vec![2, 0]),
                Monomial::new(vec![1, 1]),
                Monomial::new(vec![0, 2])
            ]
        );
        assert_eq!(Monomial::below_degree(3, 3).len(), 10);
    }

    #[test]
    fn local_order_is_multiplicative() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![0, 1, 2]);
        let c = Monomial::new(vec![1, 0, 3]);
        assert_eq!(a.local_cmp(&b), a.mul(&c).local_cmp(&b.mul(&c)));
    }
}
