use std::fmt::Write as _;

use super::MatrixError;
use crate::ring::{Ring, Scalar};

/// Dense square matrix over a commutative ring, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn new(dim: usize, entries: Vec<R>) -> Result<Self, MatrixError> {
        if dim == 0 {
            return Err(MatrixError::Empty);
        }
        if entries.len() != dim * dim {
            return Err(MatrixError::BadShape { dim, len: entries.len() });
        }
        Ok(RingMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(MatrixError::BadShape { dim, len: bad.len() * dim });
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Result<Self, MatrixError> {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading(&self, k: usize) -> Result<Self, MatrixError> {
        if k > self.dim {
            return Err(MatrixError::DimensionMismatch { left: self.dim, right: k });
        }
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let n = self.dim;
        Self::from_fn(n, |i, j| {
            (1..n).fold(self.get(i, 0).mul(other.get(0, j)), |acc, k| acc.add(&self.get(i, k).mul(other.get(k, j))))
        })
    }

    /// True when every entry strictly below the diagonal is zero.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn diagonal_product(&self) -> R {
        (1..self.dim).fold(self.get(0, 0).clone(), |acc, i| acc.mul(self.get(i, i)))
    }

    /// One row per line, entries tab-separated in their text form.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }
}

impl<R: Scalar> RingMatrix<R> {
    pub fn identity(dim: usize) -> Result<Self, MatrixError> {
        Self::from_fn(dim, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| R::from_i64(v)).collect()).collect())
    }
}
