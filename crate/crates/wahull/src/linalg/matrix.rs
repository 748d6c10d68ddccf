use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::vec_ops;
use crate::linalg::{Scalar, Subspace};

/// A dense matrix of rationals, stored row-major.
///
/// Vectors are rows and matrices act on the right, so the image of a map
/// is its row space and the kernel is the left kernel `{x | x M = 0}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        let n = rows.len();
        Ok(Matrix::new(n, cols, rows.into_iter().flatten().collect()))
    }

    /// Test convenience: builds a matrix from integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Matrix::from_rows(data, cols).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + &(a * other.get(k, c));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Keeps the first `k` columns.
    pub fn truncate_cols(&self, k: usize) -> Matrix {
        assert!(k <= self.cols);
        let mut out = Matrix::zero(self.rows, k);
        for r in 0..self.rows {
            for c in 0..k {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        out
    }

    /// Keeps the first `k` rows.
    pub fn truncate_rows(&self, k: usize) -> Matrix {
        assert!(k <= self.rows);
        Matrix::new(k, self.cols, self.entries[..k * self.cols].to_vec())
    }

    /// Reduced row echelon form, with the rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = Scalar::one() / m.get(pivot_row, col).clone();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivot_row, pivots)
    }

    /// Row space of the map `x -> x M`.
    pub fn image(&self) -> Subspace {
        Subspace::span_unchecked(self.row_vecs(), self.cols)
    }

    /// Left kernel `{x | x M = 0}` as a subspace of row vectors.
    pub fn kernel(&self) -> Subspace {
        // Null space of M^t in column convention, read off from its RREF.
        let (r, _, pivots) = self.transpose().rref();
        let n = self.rows;
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free).clone();
            }
            basis.push(v);
        }
        Subspace::span_unchecked(basis, n)
    }

    /// Exact inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::SingularMatrix);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            m.swap_rows(col, src);
            inv.swap_rows(col, src);
            let f = Scalar::one() / m.get(col, col).clone();
            m.scale_row(col, &f);
            inv.scale_row(col, &f);
            for r in 0..n {
                if r != col && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, col, &factor);
                    inv.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, f: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * f;
            self.set(r, c, v);
        }
    }

    /// row[r] -= f * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, f: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) - &(f * self.get(src, c));
            self.set(r, c, v);
        }
    }
}

/// `row * M` for a row vector.
pub fn row_times_matrix(row: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    assert_eq!(row.len(), m.rows(), "vector/matrix dimension mismatch");
    let mut out = vec![Scalar::zero(); m.cols()];
    for (k, a) in row.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for c in 0..m.cols() {
            out[c] = &out[c] + &(a * m.get(k, c));
        }
    }
    out
}

/// `M * col` for a column vector.
pub fn matrix_times_col(m: &Matrix, col: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(col.len(), m.cols(), "matrix/vector dimension mismatch");
    (0..m.rows()).map(|r| vec_ops::dot(m.row(r), col)).collect()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
