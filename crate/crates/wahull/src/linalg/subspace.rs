use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// A vector subspace of `K^n` in canonical form: the basis is the reduced
/// row echelon form of any spanning set, so two subspaces are equal as sets
/// exactly when their representations are structurally equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span_unchecked(Matrix::identity(ambient).row_vecs(), ambient)
    }

    /// Smallest subspace containing all the given vectors.
    pub fn span(vectors: Vec<Vec<Scalar>>, ambient: usize) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        Ok(Self::span_unchecked(vectors, ambient))
    }

    pub(crate) fn span_unchecked(vectors: Vec<Vec<Scalar>>, ambient: usize) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Residual of `v` after eliminating all pivot columns; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (ri, bi) in r.iter_mut().zip(row) {
                *ri = &*ri - &(&f * bi);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the spanning set, keeping the basis in RREF.
    /// Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(lead) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / r[lead].clone();
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        // Eliminate the new pivot column from the existing rows.
        for row in self.basis.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let f = row[lead].clone();
            for (ri, xi) in row.iter_mut().zip(&r) {
                *ri = &*ri - &(&f * xi);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.basis.insert(pos, r);
        true
    }

    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.basis.iter().all(|row| other.contains(row))
    }

    /// Smallest subspace containing both.
    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut s = self.clone();
        for row in &other.basis {
            s.insert(row);
        }
        s
    }

    /// Image under `x -> x M`.
    pub fn apply(&self, m: &Matrix) -> Subspace {
        let rows = self
            .basis
            .iter()
            .map(|r| super::matrix::row_times_matrix(r, m))
            .collect();
        Subspace::span_unchecked(rows, m.cols())
    }

    /// Completes the basis to an invertible matrix: the first `dim` rows are
    /// the basis, the remaining rows are standard basis vectors at the
    /// non-pivot columns in ascending order.
    pub fn complete_basis(&self) -> Matrix {
        let mut rows = self.basis.clone();
        for c in 0..self.ambient {
            if !self.pivots.contains(&c) {
                let mut e = vec![Scalar::zero(); self.ambient];
                e[c] = Scalar::one();
                rows.push(e);
            }
        }
        Matrix::from_rows(rows, self.ambient).expect("basis rows have ambient length")
    }
}
