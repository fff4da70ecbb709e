//! Truncated formal power series.
//!
//! A series of order `N` is known modulo `x^{N+1}`: its coefficients
//! `c_0..=c_N` are exact and everything above is unknown. Asking for a
//! coefficient past the order is an error, never an implicit zero.

mod bi;
mod json;
mod uni;

use thiserror::Error;

pub use bi::BiSeries;
pub use json::{parse_series, ParsedSeries, SeriesDoc, TermDoc};
pub use uni::UniSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("series orders differ ({left} vs {right}); truncate to a common order first")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient of x^{index} is unknown for a series of order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },
    #[error("cannot raise order from {have} to {want}")]
    InsufficientOrder { have: usize, want: usize },
    #[error("inner series must have zero constant term")]
    NonZeroConstantTerm,
    #[error("cannot differentiate a series of order 0")]
    DerivativeOfOrderZero,
    #[error("bivariate term t^{m} x^{n} is invalid: {reason}")]
    InvalidTerm { m: u32, n: u32, reason: &'static str },
    #[error("duplicate bivariate term t^{m} x^{n}")]
    DuplicateTerm { m: u32, n: u32 },
    #[error("iteration requires b[1,0] = 1, found {found}")]
    LinearCoefficientNotOne { found: String },
    #[error("malformed series file: {0}")]
    Format(String),
}
