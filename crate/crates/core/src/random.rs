//! Seeded generators for verification inputs.
//!
//! All randomness goes through [`CaseRng`], a ChaCha stream keyed by a `u64`
//! seed, so every generated case is reproducible across platforms.
//! Coefficients are small rationals `p/q` with `|p| <= 9` and `1 <= q <= 9`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detmat::RingMatrix;
use crate::ring::{MultiPoly, Rational, Ring, Scalar};
use crate::series::{BiSeries, UniSeries};

pub type CaseRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CaseRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut CaseRng) -> Rational {
    let p: i64 = rng.gen_range(-9..=9);
    let q: i64 = rng.gen_range(1..=9);
    Rational::new(p, q).expect("q >= 1")
}

pub fn nonzero_rational(rng: &mut CaseRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// `1 + a1 x + ...` with `a1 != 0`.
pub fn power_series(rng: &mut CaseRng, order: usize) -> UniSeries<Rational> {
    let mut coeffs = vec![Rational::one()];
    for j in 1..=order {
        coeffs.push(if j == 1 { nonzero_rational(rng) } else { small_rational(rng) });
    }
    UniSeries::new(coeffs).expect("nonempty")
}

/// `x + b1 x^2 + ...` with `b1 != 0`. `order` must be at least 1.
pub fn iteration_series(rng: &mut CaseRng, order: usize) -> UniSeries<Rational> {
    assert!(order >= 1, "an iteration series needs order >= 1");
    let mut coeffs = vec![Rational::zero(), Rational::one()];
    for j in 2..=order {
        coeffs.push(if j == 2 { nonzero_rational(rng) } else { small_rational(rng) });
    }
    UniSeries::new(coeffs).expect("nonempty")
}

/// Bivariate `f(t)` with `b[1,0] = 1`, `b[2,0]` and `b[1,1]` nonzero, and
/// every other coefficient of total degree `<= order` random.
pub fn bivariate_series(rng: &mut CaseRng, order: usize) -> BiSeries<Rational> {
    let mut terms = Vec::new();
    for m in 1..=order as u32 {
        for n in 0..=(order as u32 - m) {
            let c = match (m, n) {
                (1, 0) => Rational::one(),
                (2, 0) | (1, 1) => nonzero_rational(rng),
                _ => small_rational(rng),
            };
            terms.push((m, n, c));
        }
    }
    BiSeries::new(order, terms).expect("keys are in range")
}

/// Arbitrary series with nonzero linear coefficient.
pub fn derivative_series(rng: &mut CaseRng, order: usize) -> UniSeries<Rational> {
    let coeffs = (0..=order).map(|j| if j == 1 { nonzero_rational(rng) } else { small_rational(rng) }).collect();
    UniSeries::new(coeffs).expect("nonempty")
}

pub fn matrix(rng: &mut CaseRng, dim: usize) -> RingMatrix<Rational> {
    let entries = (0..dim * dim).map(|_| small_rational(rng)).collect();
    RingMatrix::new(dim, entries).expect("dim >= 1")
}

/// `f(t) = t + sum b[m,n] t^m x^n` with every coefficient except `b[1,0]` an
/// independent indeterminate.
pub fn symbolic_bivariate_series(order: usize) -> BiSeries<MultiPoly> {
    let mut terms = Vec::new();
    for m in 1..=order as u32 {
        for n in 0..=(order as u32 - m) {
            let c = if (m, n) == (1, 0) { MultiPoly::one() } else { MultiPoly::var(m, n) };
            terms.push((m, n, c));
        }
    }
    BiSeries::new(order, terms).expect("keys are in range")
}
