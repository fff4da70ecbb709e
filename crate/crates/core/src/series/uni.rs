use std::fmt;

use num_bigint::BigInt;

use super::SeriesError;
use crate::ring::{Ring, RingError, Scalar};

/// Dense truncated power series `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Scalar> UniSeries<R> {
    /// Series whose order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(UniSeries { coeffs })
    }

    /// Polynomial `coeffs` viewed as a series of the given order; missing
    /// coefficients are zero, extra ones are dropped.
    pub fn from_poly(coeffs: &[R], order: usize) -> Self {
        let coeffs = (0..=order).map(|j| coeffs.get(j).cloned().unwrap_or_else(R::zero)).collect();
        UniSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        let coeffs: Vec<R> = coeffs.iter().map(|&c| R::from_i64(c)).collect();
        Self::from_poly(&coeffs, order)
    }

    pub fn zero(order: usize) -> Self {
        UniSeries { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `[x^j] self`.
    pub fn coeff(&self, j: usize) -> Result<&R, SeriesError> {
        self.coeffs.get(j).ok_or(SeriesError::CoefficientOutOfRange { index: j, order: self.order() })
    }

    /// Index of the first nonzero coefficient, `None` if all known ones vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::InsufficientOrder { have: self.order(), want: order });
        }
        Ok(UniSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    fn check_same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(other)?;
        Ok(self.add_unchecked(other))
    }

    /// Cauchy product truncated to the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        UniSeries { coeffs }
    }

    // Truncates to the shorter of the two operands.
    fn mul_unchecked(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        UniSeries { coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        UniSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// `x^shift * self`, kept at the same order.
    pub fn shift(&self, shift: usize) -> Self {
        let order = self.order();
        let coeffs = (0..=order).map(|j| if j < shift { R::zero() } else { self.coeffs[j - shift].clone() }).collect();
        UniSeries { coeffs }
    }

    /// `self^i`; `self^0` is the constant 1.
    pub fn pow(&self, i: u64) -> Self {
        Ring::pow(self, i)
    }

    /// `self(inner(x))` by Horner accumulation over the coefficients of
    /// `self`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstantTerm);
        }
        let order = self.order();
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Termwise derivative; the result has order one less.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::DerivativeOfOrderZero);
        }
        let coeffs = self.coeffs[1..].iter().enumerate().map(|(j, c)| c.mul(&R::from_i64(j as i64 + 1))).collect();
        Ok(UniSeries { coeffs })
    }

    pub fn nth_derivative(&self, k: usize) -> Result<Self, SeriesError> {
        let mut s = self.clone();
        for _ in 0..k {
            s = s.derivative()?;
        }
        Ok(s)
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> UniSeries<S> {
        UniSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Scalar> fmt::Display for UniSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text.contains(' ');
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let mag = if compound { format!("({mag})") } else { mag };
            match j {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if j == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{j}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Truncated series form a commutative ring; operands of different orders
/// are truncated to the smaller one.
impl<R: Scalar> Ring for UniSeries<R> {
    fn zero_like(&self) -> Self {
        Self::zero(self.order())
    }
    fn one_like(&self) -> Self {
        Self::one(self.order())
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        Self::constant(R::from_integer(n), self.order())
    }
    fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order].iter().zip(&other.coeffs[..=order]).map(|(a, b)| a.add(b)).collect();
        UniSeries { coeffs }
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }
    fn neg(&self) -> Self {
        UniSeries { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn exact_div(&self, _divisor: &Self) -> Result<Self, RingError> {
        Err(RingError::NoExactDivision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;
    use proptest::prelude::*;

    type S = UniSeries<Rational>;

    fn s(coeffs: &[i64], order: usize) -> S {
        S::from_i64s(coeffs, order)
    }

    /// Full, untruncated polynomial product.
    fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        out
    }

    /// Substitutes the polynomial `inner` into the polynomial `outer` with no
    /// truncation at any step, then truncates once at the end.
    fn compose_oracle(outer: &S, inner: &S) -> S {
        let order = outer.order();
        let mut total = vec![Rational::zero()];
        let mut power = vec![Rational::one()];
        for c in outer.coeffs() {
            let term: Vec<Rational> = power.iter().map(|p| p * c).collect();
            if term.len() > total.len() {
                total.resize(term.len(), Rational::zero());
            }
            for (k, t) in term.into_iter().enumerate() {
                total[k] = &total[k] + &t;
            }
            power = poly_mul(&power, inner.coeffs());
        }
        S::from_poly(&total, order)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, 1], 2).try_mul(&s(&[1, 1], 2)).unwrap(), s(&[1, 2, 1], 2));
        let a = s(&[3, -1, 4, 1], 3);
        assert_eq!(a.try_mul(&S::one(3)).unwrap(), a);
        assert_eq!(s(&[1, -1], 3).try_mul(&s(&[1, 1, 1, 1], 3)).unwrap(), S::one(3));
        assert_eq!(s(&[1], 2).try_mul(&s(&[1], 3)), Err(SeriesError::OrderMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(s(&[1, 1], 3).pow(3), s(&[1, 3, 3, 1], 3));
        assert_eq!(s(&[5, 2, 7], 4).pow(0), S::one(4));
        let f = s(&[1, 1, 1], 2);
        let oracle = S::from_poly(&poly_mul(f.coeffs(), f.coeffs()), 2);
        assert_eq!(oracle, s(&[1, 2, 3], 2));
        assert_eq!(f.pow(2), oracle);
    }

    #[test]
    fn compose_examples() {
        let f = s(&[0, 1, 1], 4);
        assert_eq!(compose_oracle(&f, &f), s(&[0, 1, 2, 2, 1], 4));
        assert_eq!(f.compose(&f).unwrap(), s(&[0, 1, 2, 2, 1], 4));

        let g = s(&[0, 2, -3, 0, 7], 4);
        assert_eq!(g.compose(&S::x(4)).unwrap(), g);

        let geo = s(&[0, 1, 1, 1, 1], 4);
        assert_eq!(compose_oracle(&geo, &geo), s(&[0, 1, 2, 4, 8], 4));
        assert_eq!(geo.compose(&geo).unwrap(), s(&[0, 1, 2, 4, 8], 4));
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let f = s(&[0, 1, 1], 3);
        assert_eq!(f.compose(&s(&[1, 1], 3)), Err(SeriesError::NonZeroConstantTerm));
        assert!(matches!(f.compose(&s(&[0, 1], 4)), Err(SeriesError::OrderMismatch { .. })));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(s(&[1, 3, 3, 1], 3).derivative().unwrap(), s(&[3, 6, 3], 2));
        assert_eq!(s(&[7], 2).derivative().unwrap(), S::zero(1));
        assert_eq!(s(&[0, 0, 0, 1], 3).nth_derivative(2).unwrap(), s(&[0, 6], 1));
        assert_eq!(s(&[4], 0).derivative(), Err(SeriesError::DerivativeOfOrderZero));
    }

    #[test]
    fn coeff_extract() {
        let a = s(&[1, 2, 3], 2);
        assert_eq!(a.coeff(2).unwrap(), &Rational::from(3));
        assert_eq!(s(&[0, 1, 1], 2).coeff(0).unwrap(), &Rational::zero());
        assert_eq!(s(&[1, 2, 3, 4], 3).coeff(5), Err(SeriesError::CoefficientOutOfRange { index: 5, order: 3 }));
    }

    #[test]
    fn truncate_and_valuation() {
        let a = s(&[0, 0, 5, 1], 3);
        assert_eq!(a.valuation(), Some(2));
        assert_eq!(S::zero(3).valuation(), None);
        assert_eq!(a.truncate(1).unwrap(), S::zero(1));
        assert!(a.truncate(4).is_err());
        assert!(S::new(vec![]).is_err());
    }

    #[test]
    fn display() {
        let a = S::new(vec!["1".parse().unwrap(), "-2".parse().unwrap(), "0".parse().unwrap(), "1/3".parse().unwrap()])
            .unwrap();
        assert_eq!(a.to_string(), "1 - 2*x + 1/3*x^3 + O(x^4)");
        assert_eq!(S::zero(1).to_string(), "0 + O(x^2)");
        assert_eq!(S::x(2).to_string(), "x + O(x^3)");
    }

    fn arb_series(order: usize, constant_zero: bool) -> impl Strategy<Value = S> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), order + 1).prop_map(move |cs| {
            let mut coeffs: Vec<Rational> = cs.into_iter().map(|(p, d)| Rational::new(p, d).unwrap()).collect();
            if constant_zero {
                coeffs[0] = Rational::zero();
            }
            S::new(coeffs).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn compose_is_associative(f in arb_series(5, true), g in arb_series(5, true), h in arb_series(5, true)) {
            let left = f.compose(&g.compose(&h).unwrap()).unwrap();
            let right = f.compose(&g).unwrap().compose(&h).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn compose_matches_oracle(f in arb_series(5, false), g in arb_series(5, true)) {
            prop_assert_eq!(f.compose(&g).unwrap(), compose_oracle(&f, &g));
        }

        #[test]
        fn mul_matches_convolution(f in arb_series(6, false), g in arb_series(6, false)) {
            prop_assert_eq!(f.try_mul(&g).unwrap(), S::from_poly(&poly_mul(f.coeffs(), g.coeffs()), 6));
        }

        #[test]
        fn truncation_commutes(f in arb_series(7, true), g in arb_series(7, true), i in 0u64..5) {
            let (fl, gl) = (f.truncate(4).unwrap(), g.truncate(4).unwrap());
            prop_assert_eq!(f.pow(i).truncate(4).unwrap(), fl.pow(i));
            prop_assert_eq!(f.compose(&g).unwrap().truncate(4).unwrap(), fl.compose(&gl).unwrap());
        }

        #[test]
        fn leibniz_rule(f in arb_series(6, false), g in arb_series(6, false)) {
            let lhs = f.try_mul(&g).unwrap().derivative().unwrap();
            let (fd, gd) = (f.derivative().unwrap(), g.derivative().unwrap());
            let (ft, gt) = (f.truncate(5).unwrap(), g.truncate(5).unwrap());
            let rhs = fd.try_mul(&gt).unwrap().try_add(&ft.try_mul(&gd).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
