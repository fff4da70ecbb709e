//! Combinatorial constants and the closed-form right-hand sides of the
//! determinant identities.
//!
//! The evaluators are generic over [`Ring`], so the same code produces the
//! numeric value (rationals), the symbolic value (polynomials in `b[m,n]`)
//! and the series-valued value of the derivative identity.

use num_bigint::BigInt;

use crate::ring::{Rational, Ring, Scalar};
use crate::series::{SeriesError, UniSeries};

/// Stirling numbers of the second kind `S(k, m)` for `0 <= m <= k <= K`,
/// filled by `S(k+1, m+1) = (m+1) S(k, m+1) + S(k, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max_k: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_k + 1);
        rows.push(vec![BigInt::one()]);
        for k in 1..=max_k {
            let prev = &rows[k - 1];
            let mut row = vec![BigInt::zero(); k + 1];
            for m in 1..=k {
                let stay = if m < k { &prev[m] * BigInt::from(m) } else { BigInt::zero() };
                row[m] = stay + &prev[m - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_k(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(k, m)`, zero when `m > k`.
    ///
    /// Panics if `k` exceeds the table size.
    pub fn get(&self, k: usize, m: usize) -> BigInt {
        assert!(k <= self.max_k(), "Stirling table built to {} but S({k}, {m}) requested", self.max_k());
        self.rows[k].get(m).cloned().unwrap_or_default()
    }

    /// Replaces one cell. Exists so a verification harness can check that a
    /// corrupted table is detected.
    #[doc(hidden)]
    pub fn with_cell(mut self, k: usize, m: usize, value: BigInt) -> Self {
        self.rows[k][m] = value;
        self
    }

    /// First cell `(k, m)` violating the boundary conditions or the
    /// recurrence.
    pub fn find_violation(&self) -> Option<(usize, usize)> {
        if !self.rows[0][0].is_one() {
            return Some((0, 0));
        }
        for k in 1..=self.max_k() {
            if !self.rows[k][0].is_zero() {
                return Some((k, 0));
            }
            if !self.rows[k][k].is_one() {
                return Some((k, k));
            }
            for m in 1..k {
                let expected = &self.rows[k - 1][m] * BigInt::from(m) + &self.rows[k - 1][m - 1];
                if self.rows[k][m] != expected {
                    return Some((k, m));
                }
            }
        }
        None
    }
}

/// Number of partitions of `k` labeled objects into `m` nonempty blocks.
pub fn stirling2(k: usize, m: usize) -> BigInt {
    if m > k {
        return BigInt::zero();
    }
    StirlingTable::new(k).get(k, m)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `1! 2! ... n!`.
pub fn superfactorial(n: usize) -> BigInt {
    let mut fact = BigInt::one();
    let mut prod = BigInt::one();
    for k in 1..=n {
        fact *= BigInt::from(k);
        prod *= &fact;
    }
    prod
}

fn triangular(n: usize) -> u64 {
    (n * (n + 1) / 2) as u64
}

/// `a1^{n(n+1)/2}`.
pub fn rhs_t1<R: Ring>(a1: &R, n: usize) -> R {
    a1.pow(triangular(n))
}

/// `1! 2! ... n! * b1^{n(n+1)/2}`.
pub fn rhs_t2<R: Ring>(b1: &R, n: usize) -> R {
    b1.integer_like(&superfactorial(n)).mul(&b1.pow(triangular(n)))
}

/// `prod_{k=1}^n sum_{m=0}^k m! S(k+1, m+1) b20^m b11^{k-m}`.
pub fn rhs_t3<R: Ring>(b20: &R, b11: &R, n: usize) -> R {
    rhs_t3_with(&StirlingTable::new(n + 1), b20, b11, n)
}

/// [`rhs_t3`] reading Stirling numbers from the given table, which must
/// reach `k = n + 1`.
pub fn rhs_t3_with<R: Ring>(table: &StirlingTable, b20: &R, b11: &R, n: usize) -> R {
    let mut b20_pows = vec![b20.one_like()];
    let mut b11_pows = vec![b11.one_like()];
    for k in 1..=n {
        b20_pows.push(b20_pows[k - 1].mul(b20));
        b11_pows.push(b11_pows[k - 1].mul(b11));
    }
    let mut product = b20.one_like();
    for k in 1..=n {
        let mut factor = b20.zero_like();
        for m in 0..=k {
            let weight = factorial(m) * table.get(k + 1, m + 1);
            let term = b20.integer_like(&weight).mul(&b20_pows[m]).mul(&b11_pows[k - m]);
            factor = factor.add(&term);
        }
        product = product.mul(&factor);
    }
    product
}

/// `1! 2! ... n! * f'(x)^{n(n+1)/2}` as a series, on the window
/// `x^0 .. x^{order(f) - n}` where the derivative matrix is exact.
pub fn rhs_mina(f: &UniSeries<Rational>, n: usize) -> Result<UniSeries<Rational>, SeriesError> {
    let window = f.order().checked_sub(n).ok_or(SeriesError::InsufficientOrder { have: f.order(), want: n })?;
    if n == 0 {
        return Ok(UniSeries::one(window));
    }
    let f_prime = f.derivative()?.truncate(window)?;
    Ok(rhs_t2(&f_prime, n))
}

/// Convenience for scalar rings: `m! S(k+1, m+1)` as a ring element.
pub fn stirling_weight<R: Scalar>(k: usize, m: usize) -> R {
    R::from_integer(&(factorial(m) * stirling2(k + 1, m + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MultiPoly;

    /// Counts set partitions of `0..k` into exactly `m` blocks by walking all
    /// restricted growth strings.
    fn count_partitions(k: usize, m: usize) -> u64 {
        fn walk(pos: usize, k: usize, blocks: usize, m: usize) -> u64 {
            if pos == k {
                return u64::from(blocks == m);
            }
            // put element `pos` in an existing block or open a new one
            let mut total = 0;
            for b in 0..=blocks {
                let next = if b == blocks { blocks + 1 } else { blocks };
                if next <= m {
                    total += walk(pos + 1, k, next, m);
                }
            }
            total
        }
        walk(0, k, 0, m)
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn stirling_examples() {
        for k in 1..10 {
            assert_eq!(stirling2(k, 1), BigInt::one());
        }
        assert_eq!(count_partitions(3, 2), 3);
        assert_eq!(count_partitions(4, 2), 7);
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(2, 5), BigInt::zero());
        assert_eq!(stirling2(0, 0), BigInt::one());
    }

    #[test]
    fn stirling_matches_enumeration() {
        let table = StirlingTable::new(8);
        for k in 0..=8 {
            for m in 0..=k {
                assert_eq!(table.get(k, m), BigInt::from(count_partitions(k, m)), "S({k},{m})");
            }
        }
    }

    #[test]
    fn table_invariants() {
        let table = StirlingTable::new(20);
        assert_eq!(table.find_violation(), None);
        assert_eq!(table.get(20, 10), "5917584964655".parse::<BigInt>().unwrap());
        let broken = table.with_cell(6, 3, BigInt::from(91));
        assert_eq!(broken.find_violation(), Some((6, 3)));
    }

    #[test]
    fn superfactorials() {
        assert_eq!(superfactorial(0), BigInt::one());
        assert_eq!(superfactorial(3), BigInt::from(12));
        assert_eq!(superfactorial(5), BigInt::from(34560));
        assert_eq!(superfactorial(4), BigInt::from(288));
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(rhs_t1(&q("1"), 7), q("1"));
        assert_eq!(rhs_t1(&q("2"), 2), q("8"));
        assert_eq!(rhs_t1(&q("-5/3"), 0), q("1"));
        assert_eq!(rhs_t2(&q("1"), 3), q("12"));
        assert_eq!(rhs_t2(&q("7"), 0), q("1"));
        assert_eq!(rhs_t2(&q("1/2"), 2), q("1/4"));
        assert_eq!(rhs_t3(&q("2"), &q("3"), 2), q("175"));
        assert_eq!(rhs_t3(&q("2"), &q("3"), 0), q("1"));
    }

    #[test]
    fn rhs_t3_specializations() {
        let values = ["1", "-2", "1/3", "5/7", "-9/4"];
        for v in values {
            let v = q(v);
            for n in 0..=8 {
                assert_eq!(rhs_t3(&Rational::zero(), &v, n), rhs_t1(&v, n));
                assert_eq!(rhs_t3(&v, &Rational::zero(), n), rhs_t2(&v, n));
            }
        }
    }

    #[test]
    fn rhs_t3_symbolic_matches_numeric() {
        let b20 = MultiPoly::var(2, 0);
        let b11 = MultiPoly::var(1, 1);
        let points = [("2", "3"), ("-1/2", "4/3"), ("0", "7"), ("5", "-1")];
        for n in 0..=5 {
            let symbolic = rhs_t3(&b20, &b11, n);
            for (x, y) in points {
                let sigma = [(crate::ring::Var::new(2, 0), q(x)), (crate::ring::Var::new(1, 1), q(y))].into();
                assert_eq!(symbolic.eval(&sigma).unwrap(), rhs_t3(&q(x), &q(y), n));
            }
        }
    }

    #[test]
    fn stirling_weight_values() {
        // k = 2 inner sum: b11^2 + 3 b20 b11 + 2 b20^2
        let w: Vec<Rational> = (0..=2).map(|m| stirling_weight(2, m)).collect();
        assert_eq!(w, vec![q("1"), q("3"), q("2")]);
    }

    #[test]
    fn mina_rhs() {
        let f = UniSeries::<Rational>::from_i64s(&[1, 1], 4);
        assert_eq!(rhs_mina(&f, 1).unwrap(), UniSeries::one(3));
        assert_eq!(rhs_mina(&f, 0).unwrap(), UniSeries::one(4));
        assert!(rhs_mina(&f, 5).is_err());
    }
}
