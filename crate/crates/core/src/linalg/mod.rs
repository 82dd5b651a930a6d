//! Exact dense linear algebra over the rationals.

mod matrix;
mod scalar;
mod span;

pub use matrix::{sum_matrices, ExactMatrix};
pub use scalar::{ParseRationalError, Rational};
pub use span::{
    close_under_multiplication, contains, nullspace, nullspace_of_commutation, span_basis,
    span_basis_of_shape, SpanBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("expected {rows}x{cols} = {} entries, found {found}", rows * cols)]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("matrix of shape {}x{} is not square", shape.0, shape.1)]
    NotSquare { shape: (usize, usize) },
}
