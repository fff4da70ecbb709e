//! Exact linear algebra over coefficient rings.

mod build;
mod det;
mod matrix;

use thiserror::Error;

use crate::ring::RingError;
use crate::series::SeriesError;

pub use build::{
    binomial_transform, build_matrix_mina, build_matrix_t1, build_matrix_t2, build_matrix_t3, triangularization_check,
    Triangularization,
};
pub use det::{det_bareiss, det_division_free, det_leibniz, LEIBNIZ_MAX_DIM};
pub use matrix::RingMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("{len} entries do not form a {dim}x{dim} matrix")]
    BadShape { dim: usize, len: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("Leibniz expansion limited to dimension {max}, got {dim}")]
    LeibnizTooLarge { dim: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
