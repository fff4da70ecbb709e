//! Three determinant algorithms with independent failure modes.

use super::{MatrixError, RingMatrix};
use crate::ring::{Ring, RingError};

/// Largest dimension accepted by [`det_leibniz`]; `8!` signed products is
/// past what an oracle should be asked to do.
pub const LEIBNIZ_MAX_DIM: usize = 7;

/// Fraction-free Gaussian elimination (Bareiss).
///
/// Every step divides by the previous pivot, which is exact over an
/// integral domain; the ring's `exact_div` rejects any quotient that is not.
/// Pivots are the first nonzero entry in the column, each row swap flips
/// the sign.
pub fn det_bareiss<R: Ring>(m: &RingMatrix<R>) -> Result<R, MatrixError> {
    let n = m.dim();
    if !m.get(0, 0).has_exact_div() {
        return Err(MatrixError::Ring(RingError::NoExactDivision));
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(a[0][0].zero_like());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = cross.exact_div(&prev)?;
            }
            a[i][k] = a[i][k].zero_like();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Berkowitz's division-free algorithm.
///
/// Builds the characteristic polynomial `det(lambda I - A)` of successive
/// leading principal submatrices; each step multiplies the previous
/// coefficient vector by a lower-triangular Toeplitz matrix with first
/// column `(1, -a, -r c, -r M c, ..., -r M^{k-2} c)`, where the new
/// submatrix is `[[M, c], [r, a]]`. Uses only ring operations, so it works
/// over polynomials and truncated series.
pub fn det_division_free<R: Ring>(m: &RingMatrix<R>) -> R {
    let n = m.dim();
    let zero = m.get(0, 0).zero_like();
    let one = m.get(0, 0).one_like();
    // coefficients of the characteristic polynomial, highest degree first
    let mut charpoly = vec![one.clone()];
    for k in 1..=n {
        let last = k - 1;
        let mut column = Vec::with_capacity(k + 1);
        column.push(one.clone());
        column.push(m.get(last, last).neg());
        let mut v: Vec<R> = (0..last).map(|i| m.get(i, last).clone()).collect();
        for step in 0..last {
            let rv = (0..last).fold(zero.clone(), |acc, j| acc.add(&m.get(last, j).mul(&v[j])));
            column.push(rv.neg());
            if step + 1 < last {
                v = (0..last)
                    .map(|i| (0..last).fold(zero.clone(), |acc, j| acc.add(&m.get(i, j).mul(&v[j]))))
                    .collect();
            }
        }
        let next = (0..=k)
            .map(|i| (0..k.min(i + 1)).fold(zero.clone(), |acc, j| acc.add(&column[i - j].mul(&charpoly[j]))))
            .collect();
        charpoly = next;
    }
    let constant = charpoly.pop().expect("degree n polynomial");
    if n % 2 == 1 {
        constant.neg()
    } else {
        constant
    }
}

/// Definitional determinant: the signed sum over all permutations.
pub fn det_leibniz<R: Ring>(m: &RingMatrix<R>) -> Result<R, MatrixError> {
    let n = m.dim();
    if n > LEIBNIZ_MAX_DIM {
        return Err(MatrixError::LeibnizTooLarge { dim: n, max: LEIBNIZ_MAX_DIM });
    }
    let product = |perm: &[usize]| (1..n).fold(m.get(0, perm[0]).clone(), |acc, i| acc.mul(m.get(i, perm[i])));
    // Heap's algorithm; each generated permutation differs from the last by
    // one transposition
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut even = true;
    let mut total = product(&perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            even = !even;
            let term = product(&perm);
            total = if even { total.add(&term) } else { total.sub(&term) };
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}
