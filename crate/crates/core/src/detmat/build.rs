//! The coefficient matrices of the three determinant identities, the
//! derivative matrix of the full power identity, and the binomial
//! triangularization.

use super::{MatrixError, RingMatrix};
use crate::closedform::factorial;
use crate::ring::{Ring, Scalar};
use crate::series::{BiSeries, SeriesError, UniSeries};

fn need_order(have: usize, want: usize) -> Result<(), MatrixError> {
    if have < want {
        return Err(SeriesError::InsufficientOrder { have, want }.into());
    }
    Ok(())
}

/// `c[i][j] = [x^j] f^i` for `0 <= i, j <= n`, where `f = 1 + a1 x + ...`.
pub fn build_matrix_t1<R: Scalar>(f: &UniSeries<R>, n: usize) -> Result<RingMatrix<R>, MatrixError> {
    let constant = &f.coeffs()[0];
    if !constant.is_one() {
        return Err(MatrixError::Precondition(format!("f must have constant term 1, found {constant}")));
    }
    need_order(f.order(), n)?;
    let f = f.truncate(n)?;
    let mut power = UniSeries::one(n);
    let mut entries = Vec::with_capacity((n + 1) * (n + 1));
    for _ in 0..=n {
        entries.extend_from_slice(power.coeffs());
        power = power.try_mul(&f)?;
    }
    RingMatrix::new(n + 1, entries)
}

/// `c[i][j] = [x^{j+1}] f^{(i)}` for the compositional iterates of
/// `f = x + b1 x^2 + ...`.
pub fn build_matrix_t2<R: Scalar>(f: &UniSeries<R>, n: usize) -> Result<RingMatrix<R>, MatrixError> {
    need_order(f.order(), n + 1)?;
    let (c0, c1) = (&f.coeffs()[0], &f.coeffs()[1]);
    if !c0.is_zero() {
        return Err(MatrixError::Precondition(format!("f must have constant term 0, found {c0}")));
    }
    if !c1.is_one() {
        return Err(MatrixError::Precondition(format!("f must have linear coefficient 1, found {c1}")));
    }
    let f = f.truncate(n + 1)?;
    let mut iterate = UniSeries::x(n + 1);
    let mut entries = Vec::with_capacity((n + 1) * (n + 1));
    for _ in 0..=n {
        entries.extend_from_slice(&iterate.coeffs()[1..]);
        iterate = f.compose(&iterate)?;
    }
    RingMatrix::new(n + 1, entries)
}

/// `c[i][j] = [x^{j+1}] f^{(i)}(x)` for a bivariate `f(t)` with
/// `b[1,0] = 1`; the running iterate is carried from row to row.
pub fn build_matrix_t3<R: Scalar>(f: &BiSeries<R>, n: usize) -> Result<RingMatrix<R>, MatrixError> {
    let b10 = f.coeff(1, 0).unwrap_or_else(|_| R::zero());
    if !b10.is_one() {
        return Err(MatrixError::Precondition(format!("f must have b[1,0] = 1, found {b10}")));
    }
    need_order(f.order(), n + 1)?;
    let mut entries = Vec::with_capacity((n + 1) * (n + 1));
    for iterate in f.iterates(n + 1)?.take(n + 1) {
        entries.extend_from_slice(&iterate.coeffs()[1..]);
    }
    RingMatrix::new(n + 1, entries)
}

/// `c[i][j] = d^j/dx^j f(x)^i` as truncated series. `f^i` is taken at the
/// order `M` of `f`; every entry is cut to the order `M - n`, where all of
/// them are still exact.
pub fn build_matrix_mina<R: Scalar>(f: &UniSeries<R>, n: usize) -> Result<RingMatrix<UniSeries<R>>, MatrixError> {
    need_order(f.order(), n)?;
    let window = f.order() - n;
    let mut power = UniSeries::one(f.order());
    let mut entries = Vec::with_capacity((n + 1) * (n + 1));
    for _ in 0..=n {
        let mut d = power.clone();
        for j in 0..=n {
            if j > 0 {
                d = d.derivative()?;
            }
            entries.push(d.truncate(window)?);
        }
        power = power.try_mul(f)?;
    }
    RingMatrix::new(n + 1, entries)
}

/// `b[i][j] = (-1)^{i+j} C(i, j)`: lower triangular with unit diagonal.
pub fn binomial_transform<R: Scalar>(n: usize) -> RingMatrix<R> {
    RingMatrix::from_fn(n + 1, |i, j| {
        if j > i {
            return R::zero();
        }
        let c = factorial(i) / (factorial(j) * factorial(i - j));
        let c = if (i + j) % 2 == 1 { -c } else { c };
        R::from_integer(&c)
    })
    .expect("n + 1 >= 1")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Triangularization<R> {
    pub product: RingMatrix<R>,
    pub is_upper: bool,
    pub diag_product: R,
}

/// Forms `bc` and reports whether it is upper triangular together with the
/// product of its diagonal. With `det(b) = 1` the diagonal product of an
/// upper triangular `bc` is `det(c)`.
pub fn triangularization_check<R: Ring>(
    b: &RingMatrix<R>,
    c: &RingMatrix<R>,
) -> Result<Triangularization<R>, MatrixError> {
    let product = b.mul(c)?;
    let is_upper = product.is_upper_triangular();
    let diag_product = product.diagonal_product();
    Ok(Triangularization { product, is_upper, diag_product })
}
