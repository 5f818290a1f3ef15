//! Dense linear algebra over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::field::{fmt_rational, Coeff, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| fmt_rational(self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Coeff::zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from columns of equal length `rows`.
    pub fn from_columns(field: &Field, rows: usize, columns: Vec<Vec<Coeff>>) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Coeff>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "row length mismatch");
            for (c, v) in row.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Coeff] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Coeff> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &Coeff) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = f.add(out.get(r, c), &f.mul(a, b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Coeff]) -> Vec<Coeff> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut k: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Coeff {
        assert_eq!(self.rows, self.cols);
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = self.field.add(&acc, self.get(i, i));
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = f.sub(m.get(i, j), &f.mul(&factor, pv));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : self · v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let f = &self.field;
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Some solution of `self · x = b`, if any.
    pub fn solve(&self, b: &[Coeff]) -> Option<Vec<Coeff>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = m.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = &self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, f.one());
        }
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(f, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, m.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Coeff {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return f.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = f.neg(&det);
            }
            let pv = m.get(c, c).clone();
            det = f.mul(&det, &pv);
            let inv = f.inv(&pv);
            for i in c + 1..m.rows {
                let factor = f.mul(m.get(i, c), &inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }
}

/// Sparse vector keyed by column index.
pub type SparseVec = BTreeMap<usize, Coeff>;

/// Incremental semi-echelon form of sparse row vectors. The pivot of a row
/// is its smallest column index; pivot rows are normalized to leading 1.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    pivots: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new(field: &Field) -> Self {
        SparseEchelon {
            field: field.clone(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Eliminates leading entries against existing pivots until the leading
    /// column is free or the vector vanishes.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let f = &self.field;
        while let Some((&col, lead)) = v.first_key_value() {
            let Some(p) = self.pivots.get(&col) else {
                break;
            };
            let factor = lead.clone();
            for (c, pv) in p {
                let nv = f.sub(v.get(c).unwrap_or(&Coeff::zero()), &f.mul(&factor, pv));
                if nv.is_zero() {
                    v.remove(c);
                } else {
                    v.insert(*c, nv);
                }
            }
        }
        v
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&col, lead)) = v.first_key_value() else {
            return false;
        };
        let inv = self.field.inv(lead);
        let row = v.into_iter().map(|(c, x)| (c, self.field.mul(&x, &inv))).collect();
        self.pivots.insert(col, row);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        Matrix::from_rows(&f, rows.iter().map(|r| r.iter().map(|&v| f.from_int(v)).collect()).collect())
    }

    #[test]
    fn det_and_inverse() {
        let m = q(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.det(), Field::Rationals.one());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(q(&[&[1, 2], &[2, 4]]).det().is_zero());
    }

    #[test]
    fn nullspace_and_solve() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        let f = Field::Rationals;
        assert!(m.solve(&[f.from_int(1), f.from_int(3)]).is_none());
        let x = m.solve(&[f.from_int(1), f.from_int(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![f.from_int(1), f.from_int(2)]);
    }

    #[test]
    fn mod_p_arithmetic() {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_rows(&f, vec![vec![f.from_int(2), f.from_int(0)], vec![f.from_int(0), f.from_int(3)]]);
        assert_eq!(m.det(), f.from_int(1));
        assert_eq!(m.pow(4), Matrix::identity(&f, 2));
    }

    #[test]
    fn sparse_echelon_span() {
        let f = Field::Rationals;
        let v = |xs: &[(usize, i64)]| -> SparseVec { xs.iter().map(|&(c, x)| (c, f.from_int(x))).collect() };
        let mut e = SparseEchelon::new(&f);
        assert!(e.insert(v(&[(0, 1), (2, 1)])));
        assert!(e.insert(v(&[(0, 2), (1, 1)])));
        assert!(!e.insert(v(&[(1, 1), (2, -2)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(v(&[(1, 3), (2, -6)])));
        assert!(!e.contains(v(&[(2, 1)])));
    }
}
