//! Exact formal power series, compositional iterates, and verification of
//! determinant identities for coefficient matrices built from powers and
//! iterates of a series.
//!
//! Layers, bottom up:
//!
//! - [`ring`]: rationals, integers and polynomials in `b[m,n]` behind one
//!   commutative-ring contract.
//! - [`series`]: truncated univariate and bivariate series, composition,
//!   substitution and iteration.
//! - [`detmat`]: the theorem matrices, three determinant algorithms and the
//!   binomial triangularization.
//! - [`closedform`]: Stirling numbers, superfactorials and the closed-form
//!   right-hand sides.
//! - [`cli`]: the `compdet` command-line front end and its self-check.

pub mod cli;
pub mod closedform;
pub mod detmat;
pub mod random;
pub mod ring;
pub mod series;
