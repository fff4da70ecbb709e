use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Ring, RingError, Scalar};

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator, so zero is
/// uniquely `0/1` and structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, RingError> {
        let denom = denom.into();
        if Zero::is_zero(&denom) {
            return Err(RingError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational, RingError> {
        if other.0.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn recip(&self) -> Result<Rational, RingError> {
        Rational::from_int(1).checked_div(self)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = RingError;

    /// Accepts `p` or `p/q` with optional leading minus signs; the result is
    /// normalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| RingError::Parse { input: s.to_string(), reason: reason.to_string() };
        let parse_int = |part: &str| -> Result<BigInt, RingError> {
            let digits = part.strip_prefix('-').unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected a decimal integer"));
            }
            part.parse::<BigInt>().map_err(|e| err(&e.to_string()))
        };
        let trimmed = s.trim();
        match trimmed.split_once('/') {
            None => Ok(Rational::from_int(parse_int(trimmed)?)),
            Some((p, q)) => {
                let q = parse_int(q)?;
                if Zero::is_zero(&q) {
                    return Err(err("zero denominator"));
                }
                Rational::new(parse_int(p)?, q)
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational(BigRational::zero())
    }
    fn one_like(&self) -> Self {
        Rational(BigRational::one())
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        Rational::from_int(n.clone())
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
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn has_exact_div(&self) -> bool {
        true
    }
    fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        self.checked_div(divisor)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_integer(n: &BigInt) -> Self {
        Rational::from_int(n.clone())
    }
}
