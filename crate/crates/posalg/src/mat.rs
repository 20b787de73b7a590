//! Dense matrices with exact entrywise order predicates.
//!
//! Entries are stored row-major; equality is exact entrywise equality.
//! "Positive" throughout the crate means entrywise nonnegative, never
//! positive definite.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::{Error, Scalar};

/// Dense `rows x cols` matrix over a [`Scalar`] field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>, // row-major, entry (r, c) at index r * cols + c
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::shape("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::shape("matrix dimensions must be positive"));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::shape("rows of unequal length"));
        }
        let nrows = rows.len();
        Ok(Matrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-literal constructor; the usual way fixed examples enter
    /// tests and built-in constructions.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular and nonempty")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    /// The matrix unit `E_{ij}` (0-based indices), all zeros except a one
    /// in cell `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if (r, c) == (i, j) {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    /// The nilpotent Jordan block: ones on the first superdiagonal.
    pub fn jordan_nilpotent(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if c == r + 1 { T::one() } else { T::zero() })
    }

    pub fn diagonal(values: &[T]) -> Self {
        let n = values.len();
        Matrix::from_fn(
            n,
            n,
            |r, c| if r == c { values[r].clone() } else { T::zero() },
        )
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

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    /// Row-major flattening into the `rows*cols`-dimensional coordinate
    /// space; the fixed vectorization order used for every span, rank and
    /// coordinate certificate in the crate.
    pub fn vectorize(&self) -> Vec<T> {
        self.entries.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, v: Vec<T>) -> Result<Self, Error> {
        Matrix::new(rows, cols, v)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() * k.clone()
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.same_shape(other, "add")?;
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() + other.at(r, c).clone()
        }))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.same_shape(other, "subtract")?;
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() - other.at(r, c).clone()
        }))
    }

    /// Exact matrix product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k).clone() * other.at(k, c).clone();
            }
            acc
        }))
    }

    /// Exact `m`-th power of a square matrix; `m = 0` gives the identity.
    pub fn pow(&self, m: usize) -> Result<Self, Error> {
        self.require_square("power")?;
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..m {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// The commutator `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self, Error> {
        self.require_square("commutator")?;
        self.same_shape(other, "commutator")?;
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// Entrywise `self >= other`.
    pub fn entrywise_ge(&self, other: &Self) -> Result<bool, Error> {
        self.same_shape(other, "compare")?;
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .all(|(a, b)| *a >= *b))
    }

    /// True iff every entry is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|v| *v >= T::zero())
    }

    /// First entry (row-major order) strictly below zero, if any.
    pub fn first_negative_entry(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|v| *v < T::zero())
            .map(|idx| (idx / self.cols, idx % self.cols))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    /// Exact idempotency test `A^2 = A` for square matrices.
    pub fn is_idempotent(&self) -> Result<bool, Error> {
        self.require_square("idempotency")?;
        Ok(self.checked_mul(self)? == *self)
    }

    pub fn trace(&self) -> Result<T, Error> {
        self.require_square("trace")?;
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        Ok(acc)
    }

    /// Extracts the submatrix with the given (0-based) row and column
    /// index lists, in the order given.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<Self, Error> {
        if row_idx.is_empty() || col_idx.is_empty() {
            return Err(Error::shape("empty submatrix selection"));
        }
        if row_idx.iter().any(|&r| r >= self.rows) || col_idx.iter().any(|&c| c >= self.cols) {
            return Err(Error::shape("submatrix index out of range"));
        }
        Ok(Matrix::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self.at(row_idx[r], col_idx[c]).clone()
        }))
    }

    /// Applies a symmetric permutation: entry `(a, b)` of the result is
    /// entry `(order[a], order[b])` of `self`, i.e. `P^T A P` where `P`
    /// has `P[order[a], a] = 1`.
    pub fn permute_symmetric(&self, order: &[usize]) -> Result<Self, Error> {
        self.require_square("symmetric permutation")?;
        if order.len() != self.rows {
            return Err(Error::shape("permutation length mismatch"));
        }
        self.submatrix(order, order)
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<(), Error> {
        if self.shape() != other.shape() {
            return Err(Error::shape(format!(
                "cannot {} {}x{} and {}x{}",
                what, self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn require_square(&self, what: &str) -> Result<(), Error> {
        if !self.is_square() {
            return Err(Error::shape(format!(
                "{} requires a square matrix, got {}x{}",
                what, self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.entries[r * self.cols + c]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs)
            .expect("matrix addition shape mismatch")
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs)
            .expect("matrix subtraction shape mismatch")
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs)
            .expect("matrix product shape mismatch")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c).clone())
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} matrix\n{}", self.rows, self.cols, self)
    }
}


#[cfg(test)]
mod proptests {
    use num_traits::Zero;
    use proptest::prelude::*;

    use crate::{rat, Mat};

    fn small_square(n: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-4i64..=4, n * n)
            .prop_map(move |vals| Mat::from_vec(n, n, vals.into_iter().map(rat).collect()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn commutator_is_antisymmetric_with_zero_trace(
            n in 2usize..=4,
            seed in any::<u64>(),
        ) {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let a = Mat::from_fn(n, n, |_, _| rat(rng.below(9) as i64 - 4));
            let b = Mat::from_fn(n, n, |_, _| rat(rng.below(9) as i64 - 4));
            let ab = a.commutator(&b).unwrap();
            let ba = b.commutator(&a).unwrap();
            prop_assert_eq!(&ab, &-&ba);
            prop_assert!(ab.trace().unwrap().is_zero());
        }

        #[test]
        fn product_transposes_contravariantly(a in small_square(3), b in small_square(3)) {
            let left = a.checked_mul(&b).unwrap().transpose();
            let right = b.transpose().checked_mul(&a.transpose()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
