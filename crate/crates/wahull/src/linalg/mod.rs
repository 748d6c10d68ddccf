//! Exact linear algebra over the rationals: canonical subspaces, row
//! reduction, kernels, basis completion and change-of-basis utilities.
//!
//! Everything here is exact; there is no floating point anywhere in the
//! crate. Values are immutable after construction and all operations are
//! pure functions.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{matrix_times_col, row_times_matrix, Matrix};
pub use scalar::Scalar;
pub use subspace::Subspace;

/// Small helpers for row vectors represented as `Vec<Scalar>`.
pub mod vec_ops {
    use super::Scalar;

    pub fn zeros(n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); n]
    }

    pub fn int_vec(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| -x).collect()
    }

    pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }
}
