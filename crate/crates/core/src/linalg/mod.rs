//! Exact scalar arithmetic and dense linear algebra.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, Residue, Scalar};
pub use matrix::{ExactMatrix, RowEchelon};
pub use subspace::{Basis, Quotient};

/// Rank over the field of the matrix.
pub fn rank(m: &ExactMatrix) -> usize {
    m.rank()
}

/// Columns spanning the null space.
pub fn kernel_basis(m: &ExactMatrix) -> ExactMatrix {
    m.kernel_basis()
}

/// Some solution of `m x = b`, or `None` if inconsistent.
pub fn solve(m: &ExactMatrix, b: &ExactMatrix) -> Result<Option<ExactMatrix>, crate::error::LinalgError> {
    m.solve(b)
}

pub fn kronecker(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.kronecker(b)
}
