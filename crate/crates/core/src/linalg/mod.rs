//! Exact dense linear algebra over the rationals.

mod bruhat;
mod matrix;
mod permanent;
mod permutation;
mod rational;

pub use bruhat::{bruhat, determinant, has_pu_form, pu_permutation, BruhatFactorisation};
pub use matrix::{Echelon, Matrix, Nullspace};
pub use permanent::{permanent, permanent_sparse, permanent_with_limit, PERMANENT_MAX_N};
pub use permutation::Permutation;
pub use rational::{ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("{op}: dimension mismatch {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a permutation matrix")]
    NotAPermutationMatrix,
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("matrix size {n} exceeds the limit {limit}")]
    SizeGuard { n: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Leftmost nonzero column per row; `None` marks a zero row.
pub fn leftmost_profile(m: &Matrix) -> Vec<Option<usize>> {
    m.leftmost_profile()
}

pub fn invert(m: &Matrix) -> Result<Matrix, LinalgError> {
    m.invert()
}
