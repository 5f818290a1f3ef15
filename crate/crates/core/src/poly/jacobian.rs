//! Jacobian matrices, determinants and minors.


use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Square matrix of polynomials, row-major.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// `∂f_i/∂x_{vars[j]}`.
pub fn jacobian_matrix_wrt(fs: &[Polynomial], vars: &[usize]) -> PolyMatrix {
    fs.iter()
        .map(|f| vars.iter().map(|&j| f.derivative(j)).collect())
        .collect()
}

/// Full Jacobian matrix with respect to every ring variable.
pub fn jacobian_matrix(fs: &[Polynomial]) -> PolyMatrix {
    let n = fs.first().map_or(0, |f| f.ring().n());
    jacobian_matrix_wrt(fs, &(0..n).collect::<Vec<_>>())
}

/// Determinant by cofactor expansion along the first row.
pub fn poly_det(m: &PolyMatrix) -> Polynomial {
    assert!(!m.is_empty(), "empty matrix");

    let n = m.len();
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    fn go(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.len() == 1 {
            return m[rows[0]][cols[0]].clone();
        }
        if rows.len() == 2 {
            let a = &m[rows[0]][cols[0]];
            let b = &m[rows[0]][cols[1]];
            let c = &m[rows[1]][cols[0]];
            let d = &m[rows[1]][cols[1]];
            return a.mul(d).sub(&b.mul(c));
        }
        let r = rows[0];
        let sub_rows = &rows[1..];
        let mut acc = Polynomial::zero(m[r][cols[0]].ring());
        for (k, &c) in cols.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = m[r][c].mul(&go(m, sub_rows, &sub_cols));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    go(m, &rows, &cols)
}

/// The minor `Δ_ij`: determinant with row `i` and column `j` deleted.
/// For a 1×1 matrix this is the constant 1.
pub fn minor(m: &PolyMatrix, i: usize, j: usize) -> Polynomial {
    if m.len() == 1 {
        return Polynomial::one(m[0][0].ring());
    }
    let sub: PolyMatrix = m
        .iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != j)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    poly_det(&sub)
}

/// Matrix of linear coefficients: entry `(i, j)` is the coefficient of
/// `x_j` in `f_i`, i.e. the Jacobian evaluated at the origin.
pub fn linear_part(fs: &[Polynomial]) -> Matrix {
    let field: Field = fs[0].field().clone();
    Matrix::from_rows(&field, fs.iter().map(Polynomial::linear_coeffs).collect())
}

#[derive(Clone, Debug)]
pub struct JacobianData {
    pub matrix: PolyMatrix,
    pub det: Polynomial,
    /// Rank of the Jacobian at the origin.
    pub rank0: usize,
}

/// Jacobian of a square system `f_1..f_n` in `n` variables.
pub fn jacobian_data(fs: &[Polynomial]) -> Result<JacobianData> {
    let Some(first) = fs.first() else {
        return Err(Error::InvalidInput("no generators".into()));
    };
    let n = first.ring().n();
    if fs.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: fs.len(),
        });
    }
    let matrix = jacobian_matrix(fs);
    let det = poly_det(&matrix);
    let rank0 = linear_part(fs).rank();
    Ok(JacobianData { matrix, det, rank0 })
}

pub fn hessian_matrix(f: &Polynomial) -> PolyMatrix {
    let n = f.ring().n();
    let grads: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    jacobian_matrix(&grads)
}

pub fn hessian_det(f: &Polynomial) -> Polynomial {
    poly_det(&hessian_matrix(f))
}

pub fn gradient(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.ring().n()).map(|i| f.derivative(i)).collect()
}

/// True when every entry vanishes.
pub fn is_zero_matrix(m: &PolyMatrix) -> bool {
    m.iter().all(|row| row.iter().all(|p| p.is_zero()))
}
