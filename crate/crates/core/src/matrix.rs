//! Dense matrices over arbitrary-precision rationals.
//!
//! Small and unapologetically O(n^3): every consumer in this crate works on
//! matrices whose dimension is a few dozen, where exactness is the point.

use std::ops::{Index, IndexMut};

use num::{BigRational, One, Zero};

use crate::Error;

/// A dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix by evaluating `entry(row, col)` at every position.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let data = (0..rows * cols)
            .map(|k| entry(k / cols, k % cols))
            .collect();
        RationalMatrix { rows, cols, data }
    }

    /// Convenience constructor from integer rows, mostly for tests.
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == cols), "ragged rows");
        RationalMatrix::from_fn(rows.len(), cols, |i, j| {
            BigRational::from_integer(rows[i][j].into())
        })
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        RationalMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        RationalMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| {
                acc + &self[(i, k)] * &other[(k, j)]
            })
        })
    }

    /// Matrix–vector product `self * v`.
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(BigRational::zero(), |acc, k| acc + &self[(i, k)] * &v[k])
            })
            .collect()
    }

    /// Exact equality with the identity matrix.
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Solves `self * x = rhs` by Gaussian elimination over the rationals.
    ///
    /// Pivots on the first nonzero entry in each column; with exact
    /// arithmetic that is all the stability needed. A matrix without full
    /// rank is reported as [`Error::SingularMatrix`].
    pub fn solve(&self, rhs: &[BigRational]) -> Result<Vec<BigRational>, Error> {
        assert!(self.is_square(), "can only solve square systems");
        assert_eq!(rhs.len(), self.rows, "right-hand side has wrong length");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut b = rhs.to_vec();

        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot_row != col {
                for c in 0..n {
                    a.swap(pivot_row * n + c, col * n + c);
                }
                b.swap(pivot_row, col);
            }
            let pivot = a[col * n + col].clone();
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &pivot;
                for c in col..n {
                    let delta = &a[col * n + c] * &factor;
                    a[r * n + c] -= delta;
                }
                let delta = &b[col] * &factor;
                b[r] -= delta;
            }
        }

        // Back substitution; reuse `b` as the solution vector.
        for col in (0..n).rev() {
            let mut acc = b[col].clone();
            for c in col + 1..n {
                acc -= &a[col * n + c] * &b[c];
            }
            b[col] = acc / &a[col * n + col];
        }
        Ok(b)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (row, col): (usize, usize)) -> &BigRational {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.data[row * self.cols + col]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut BigRational {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &mut self.data[row * self.cols + col]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn identity_round_trips_through_mul() {
        let m = RationalMatrix::from_integer_rows(&[vec![2, -1], vec![-2, 3]]);
        let id = RationalMatrix::identity(2);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
        assert!(id.is_identity());
        assert!(!m.is_identity());
    }

    #[test]
    fn solve_small_system() {
        // 2x - y = 3, -2x + 3y = 1  =>  x = 5/2, y = 2
        let m = RationalMatrix::from_integer_rows(&[vec![2, -1], vec![-2, 3]]);
        let rhs = vec![rat(3, 1), rat(1, 1)];
        let solution = m.solve(&rhs).unwrap();
        assert_eq!(solution, vec![rat(5, 2), rat(2, 1)]);
        assert_eq!(m.mul_vec(&solution), rhs);
    }

    #[test]
    fn solve_needs_row_swaps() {
        // Leading zero forces pivoting.
        let m = RationalMatrix::from_integer_rows(&[vec![0, 1, 1], vec![1, 0, 2], vec![2, 1, 0]]);
        let rhs = vec![rat(3, 1), rat(5, 1), rat(4, 1)];
        let solution = m.solve(&rhs).unwrap();
        assert_eq!(m.mul_vec(&solution), rhs);
    }

    #[test]
    fn singular_matrix_is_reported() {
        let m = RationalMatrix::from_integer_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(
            m.solve(&[rat(1, 1), rat(2, 1)]).unwrap_err(),
            Error::SingularMatrix
        );
    }

    #[test]
    fn inverse_product_detected_as_identity() {
        let m = RationalMatrix::from_integer_rows(&[vec![3, -1], vec![-2, 3]]);
        // Inverse of [[3,-1],[-2,3]] is 1/7 [[3,1],[2,3]].
        let inv = RationalMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) | (1, 1) => rat(3, 7),
            (0, 1) => rat(1, 7),
            (1, 0) => rat(2, 7),
            _ => unreachable!(),
        });
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }
}
