//! Dense exact matrices and the elimination routines built on them.

mod bareiss;
mod echelon;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

pub use bareiss::{determinant, rank_exact};
pub use echelon::{kernel_basis, solve, Echelon, SparseRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("dimension mismatch in {op}: left is {}x{}, right is {}x{}", left.0, left.1, right.0, right.1)]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ragged input: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system has a {0}-dimensional family of solutions")]
    NotUnique(usize),
}

/// Row-major dense matrix with exact entries.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(MatError::Ragged {
                    row: i,
                    expected: n_cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
    }

    /// Column vector.
    pub fn column(entries: Vec<T>) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.rows {
            return Err(MatError::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, MatError> {
        if self.cols != v.len() {
            return Err(MatError::DimensionMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    fn zip_with(&self, other: &Self, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Self, MatError> {
        if self.shape() != other.shape() {
            return Err(MatError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, MatError> {
        self.zip_with(other, "add", |a, b| a.clone() + b.clone())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, MatError> {
        self.zip_with(other, "sub", |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if a.is_zero() {
                T::zero()
            } else {
                a.clone() * other.get(r % other.rows, c % other.cols).clone()
            }
        })
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                self.get(r, r).is_zero() && (r + 1..self.cols).all(|c| *self.get(r, c) == -self.get(c, r).clone())
            })
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, MatError> {
        self.matmul(other)?.checked_sub(&other.matmul(self)?)
    }

    /// `self·other + other·self`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self, MatError> {
        self.matmul(other)?.checked_add(&other.matmul(self)?)
    }

    /// Nonzero entries of row `r` as `(column, value)` pairs.
    pub fn row_entries(&self, r: usize) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.row(r).iter().enumerate().filter(|(_, v)| !v.is_zero())
    }

    /// Entries as `i64` when every entry is an integer in range.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(T::to_i64_exact).collect())
            .collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Panics on a shape mismatch; use [`Matrix::matmul`] when shapes are untrusted.
impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.matmul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: Self) -> Matrix<T> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: Self) -> Matrix<T> {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|v| -v.clone())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    type M = Matrix<BigRational>;

    fn m(rows: &[&[i64]]) -> M {
        M::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn identity_squared() {
        let i2 = M::identity(2);
        assert_eq!(&i2 * &i2, i2);
    }

    #[test]
    fn swap_is_an_involution() {
        let s = m(&[&[0, 1], &[1, 0]]);
        assert!((&s * &s).is_identity());
    }

    #[test]
    fn base_pair_product() {
        let p0 = m(&[&[1, 0], &[0, -1]]);
        let p1 = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(&p0 * &p1, m(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn matmul_reports_both_shapes() {
        let a = M::zeros(2, 3);
        let b = M::zeros(2, 3);
        let err = a.matmul(&b).unwrap_err();
        assert_eq!(
            err,
            MatError::DimensionMismatch {
                op: "matmul",
                left: (2, 3),
                right: (2, 3)
            }
        );
        assert!(err.to_string().contains("2x3"));
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = M::from_rows(vec![vec![BigRational::from_i64(1)], vec![]]).unwrap_err();
        assert!(matches!(err, MatError::Ragged { row: 1, .. }));
    }

    #[test]
    fn kron_and_block_diag_shapes() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let i2 = M::identity(2);
        let k = a.kron(&i2);
        assert_eq!(k.shape(), (4, 4));
        assert_eq!(*k.get(2, 0), BigRational::from_i64(3));
        assert_eq!(*k.get(3, 1), BigRational::from_i64(3));
        assert!(k.get(3, 0).is_zero());
        let bd = M::block_diag(&[a.clone(), i2]);
        assert_eq!(bd.shape(), (4, 4));
        assert_eq!(bd.trace(), BigRational::from_i64(7));
    }

    #[test]
    fn symmetry_predicates() {
        assert!(m(&[&[0, 1], &[1, 0]]).is_symmetric());
        assert!(m(&[&[0, -1], &[1, 0]]).is_skew());
        assert!(!m(&[&[1, -1], &[1, 0]]).is_skew());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = M> {
        prop::collection::vec(-3i64..=3, n * n)
            .prop_map(move |v| M::from_fn(n, n, |r, c| BigRational::from_i64(v[r * n + c])))
    }

    proptest! {
        #[test]
        fn matmul_is_associative(a in small_matrix(3), b in small_matrix(3), c in small_matrix(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
