//! Dense row-major matrices over the crate's exact scalar types.
//!
//! This is a deliberately small container, not a linear-algebra framework;
//! the algorithms live in [`crate::linalg`].

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::scalar::{ExtScalar, Int, Rational};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMat = Mat<Int>;
pub type RatMat = Mat<Rational>;
pub type ExtMat = Mat<ExtScalar>;

impl<T> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }
}

impl<T: Clone> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged row");
        }
        let n = rows.len();
        Mat {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Mat {
            rows,
            cols,
            data: alloc::vec![value; rows * cols],
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Stacks `below` underneath `self`; column counts must match unless one
    /// side has no rows.
    pub fn stack(&self, below: &Self) -> Self {
        if self.rows == 0 {
            return below.clone();
        }
        if below.rows == 0 {
            return self.clone();
        }
        assert_eq!(self.cols, below.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Mat {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::filled(rows, cols, T::zero())
    }
}

impl<T> Mat<T>
where
    T: Clone + Zero + Add<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        Mat::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k) * rhs.at(k, c);
            }
            acc
        })
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(r, k) * &v[k];
                }
                acc
            })
            .collect()
    }

    /// `v · self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.rows, v.len(), "dimension mismatch");
        (0..self.cols)
            .map(|c| {
                let mut acc = T::zero();
                for k in 0..self.rows {
                    acc = acc + &v[k] * self.at(k, c);
                }
                acc
            })
            .collect()
    }
}

impl IntMat {
    pub fn from_i64_rows(rows: &[&[i64]], cols: usize) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| crate::vector::int_from_i64(r))
                .collect(),
            cols,
        )
    }

    pub fn to_rational(&self) -> RatMat {
        self.map(|n| Rational::from_integer(n.clone()))
    }

    /// Exact determinant of a square integer matrix.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let d = self.to_rational().det();
        debug_assert!(d.is_integer());
        d.to_integer()
    }
}

impl RatMat {
    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let mut m = self.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let pivot_row = (k..n).find(|&r| !m.at(r, k).is_zero());
            let Some(p) = pivot_row else {
                return Rational::zero();
            };
            if p != k {
                m.swap_rows(p, k);
                det = -det;
            }
            let pivot = m.at(k, k).clone();
            det *= &pivot;
            for r in k + 1..n {
                if m.at(r, k).is_zero() {
                    continue;
                }
                let factor = m.at(r, k) / &pivot;
                for c in k..n {
                    let x = m.at(r, c) - &(m.at(k, c) * &factor);
                    *m.at_mut(r, c) = x;
                }
            }
        }
        det
    }
}

// Debug prints one row per line, which is what you want when staring at a
// Smith normal form gone wrong.
impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
