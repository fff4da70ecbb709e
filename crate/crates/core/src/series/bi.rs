use std::collections::BTreeMap;
use std::fmt;

use super::{SeriesError, UniSeries};
use crate::ring::Scalar;

/// Truncated bivariate series `sum b[m,n] t^m x^n` with no `t^0` part,
/// known for total degree `m + n <= order`.
///
/// Only nonzero coefficients are stored; absent keys are zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries<R> {
    terms: BTreeMap<(u32, u32), R>,
    order: usize,
}

impl<R: Scalar> BiSeries<R> {
    /// Builds a series from `(m, n, b[m,n])` triples. Duplicate keys, `m = 0`
    /// and `m + n > order` are rejected.
    pub fn new(order: usize, terms: impl IntoIterator<Item = (u32, u32, R)>) -> Result<Self, SeriesError> {
        let mut map = BTreeMap::new();
        for (m, n, c) in terms {
            if m == 0 {
                return Err(SeriesError::InvalidTerm { m, n, reason: "t-degree must be at least 1" });
            }
            if (m + n) as usize > order {
                return Err(SeriesError::InvalidTerm { m, n, reason: "total degree exceeds the order" });
            }
            if map.contains_key(&(m, n)) {
                return Err(SeriesError::DuplicateTerm { m, n });
            }
            map.insert((m, n), c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(BiSeries { terms: map, order })
    }

    /// `t` itself, the identity transformation.
    pub fn identity(order: usize) -> Self {
        BiSeries::new(order, [(1, 0, R::one())]).expect("t is valid for any order >= 1")
    }

    /// `t * g(x)`; iterating it multiplies by `g` each time.
    pub fn t_times(g: &UniSeries<R>) -> Self {
        let order = g.order() + 1;
        let terms = g.coeffs().iter().enumerate().map(|(n, c)| (1, n as u32, c.clone()));
        BiSeries::new(order, terms).expect("t-degree 1 terms within order")
    }

    /// `f(t)` with no dependence on `x`. `f` must have zero constant term.
    pub fn from_univariate(f: &UniSeries<R>) -> Result<Self, SeriesError> {
        if !f.coeffs()[0].is_zero() {
            return Err(SeriesError::NonZeroConstantTerm);
        }
        let terms = f.coeffs().iter().enumerate().skip(1).map(|(m, c)| (m as u32, 0, c.clone()));
        BiSeries::new(f.order(), terms)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Nonzero coefficients keyed by `(m, n)`.
    pub fn terms(&self) -> &BTreeMap<(u32, u32), R> {
        &self.terms
    }

    pub fn coeff(&self, m: u32, n: u32) -> Result<R, SeriesError> {
        if (m + n) as usize > self.order {
            return Err(SeriesError::CoefficientOutOfRange { index: (m + n) as usize, order: self.order });
        }
        Ok(self.terms.get(&(m, n)).cloned().unwrap_or_else(R::zero))
    }

    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::InsufficientOrder { have: self.order, want: order });
        }
        let terms =
            self.terms.iter().filter(|(&(m, n), _)| (m + n) as usize <= order).map(|(k, c)| (*k, c.clone())).collect();
        Ok(BiSeries { terms, order })
    }

    fn check_iteration_hypothesis(&self) -> Result<(), SeriesError> {
        let b10 = self.terms.get(&(1, 0)).cloned().unwrap_or_else(R::zero);
        if !b10.is_one() {
            return Err(SeriesError::LinearCoefficientNotOne { found: b10.to_string() });
        }
        Ok(())
    }

    /// `sum b[m,n] g(x)^m x^n` truncated to `self.order()`, by Horner in `t`
    /// over the `x`-polynomials `P_m(x) = sum_n b[m,n] x^n`.
    pub fn substitute(&self, g: &UniSeries<R>) -> Result<UniSeries<R>, SeriesError> {
        if !g.coeffs()[0].is_zero() {
            return Err(SeriesError::NonZeroConstantTerm);
        }
        let order = self.order;
        let g = g.truncate(order)?;
        let max_m = self.terms.keys().map(|&(m, _)| m).max().unwrap_or(0) as usize;
        let mut by_power = vec![vec![R::zero(); order + 1]; max_m + 1];
        for (&(m, n), c) in &self.terms {
            by_power[m as usize][n as usize] = c.clone();
        }
        let mut acc = UniSeries::zero(order);
        for m in (1..=max_m).rev() {
            let p_m = UniSeries::new(std::mem::take(&mut by_power[m])).expect("nonempty");
            acc = acc.try_add(&p_m)?.try_mul(&g)?;
        }
        Ok(acc)
    }

    /// The `i`-th iterate `f^{(i)}(x)` at the given order, starting from
    /// `f^{(0)} = x`. Requires `b[1,0] = 1`.
    pub fn iterate(&self, i: usize, order: usize) -> Result<UniSeries<R>, SeriesError> {
        self.check_iteration_hypothesis()?;
        let f = self.truncate(order)?;
        let mut g = UniSeries::x(order);
        for _ in 0..i {
            g = f.substitute(&g)?;
        }
        Ok(g)
    }

    /// Iterator over `f^{(0)}, f^{(1)}, ...` at the given order, each computed
    /// from the previous one.
    pub fn iterates(&self, order: usize) -> Result<impl Iterator<Item = UniSeries<R>>, SeriesError> {
        self.check_iteration_hypothesis()?;
        let f = self.truncate(order)?;
        let first = UniSeries::x(order);
        Ok(std::iter::successors(Some(first), move |g| Some(f.substitute(g).expect("orders agree and g(0) = 0"))))
    }
}

impl<R: Scalar> fmt::Display for BiSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, ((m, n), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{m}*x^{n}")?;
        }
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        write!(f, " + O({})", self.order + 1)
    }
}
