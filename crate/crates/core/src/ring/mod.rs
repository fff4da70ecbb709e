//! Coefficient rings.
//!
//! Everything downstream (series, matrices, determinants, closed forms) is
//! generic over [`Ring`]. Values are immutable: every operation returns a
//! fresh value.
//!
//! Two traits are provided. [`Ring`] builds constants from an existing value
//! (`zero_like`, `one_like`), which is what a ring of truncated series needs
//! because its zero depends on the truncation order. [`Scalar`] adds
//! context-free constants and is implemented by the plain coefficient rings:
//! integers, rationals and polynomials.

mod multipoly;
mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use multipoly::{Monomial, MultiPoly, Var};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {dividend} is not a multiple of {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("ring has no exact division; use a division-free algorithm")]
    NoExactDivision,
    #[error("variable {0} missing from assignment")]
    MissingVariable(Var),
    #[error("cannot parse {input:?} as a rational: {reason}")]
    Parse { input: String, reason: String },
}

/// Commutative ring with identity.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Image of an integer under the canonical map Z -> R.
    fn integer_like(&self, n: &BigInt) -> Self;

    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, exp: u64) -> Self {
        let mut result = self.one_like();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    fn has_exact_div(&self) -> bool {
        false
    }

    /// Returns `q` with `q * divisor == self`.
    fn exact_div(&self, _divisor: &Self) -> Result<Self, RingError> {
        Err(RingError::NoExactDivision)
    }
}

/// A ring whose constants exist without a template value.
pub trait Scalar: Ring {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        Zero::zero()
    }
    fn one_like(&self) -> Self {
        One::one()
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        n.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn has_exact_div(&self) -> bool {
        true
    }
    fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        if Zero::is_zero(divisor) {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = self.div_rem(divisor);
        if !Zero::is_zero(&r) {
            return Err(RingError::InexactDivision { dividend: self.to_string(), divisor: divisor.to_string() });
        }
        Ok(q)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_exact_div() {
        let a = BigInt::from(12);
        assert_eq!(a.exact_div(&BigInt::from(-4)).unwrap(), BigInt::from(-3));
        assert!(matches!(a.exact_div(&BigInt::from(5)), Err(RingError::InexactDivision { .. })));
        assert_eq!(a.exact_div(&BigInt::from(0)), Err(RingError::DivisionByZero));
    }

    #[test]
    fn pow_by_squaring() {
        let two = BigInt::from(2);
        assert_eq!(Ring::pow(&two, 0), BigInt::from(1));
        assert_eq!(Ring::pow(&two, 10), BigInt::from(1024));
        assert_eq!(Ring::pow(&BigInt::from(-3), 3), BigInt::from(-27));
    }
}
