//! Row-major dense matrices over any [`Scalar`].

use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::Dimension {
                what: "dense entries",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, Error> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * m);
        for row in rows {
            if row.len() != m {
                return Err(Error::Dimension {
                    what: "dense row",
                    expected: m,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(DenseMatrix {
            rows: n,
            cols: m,
            data,
        })
    }

    /// `rows × cols` zeros shaped like `template`.
    pub fn zeros_like(rows: usize, cols: usize, template: &S) -> Self {
        let z = template.zero_like();
        DenseMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| z.clone()).collect(),
        }
    }

    pub fn identity_like(n: usize, template: &S) -> Self {
        let mut m = DenseMatrix::zeros_like(n, n, template);
        let one = template.one_like();
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
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

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn into_entries(self) -> Vec<S> {
        self.data
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    /// Largest entry magnitude of `self − other`.
    pub fn max_diff(&self, other: &Self) -> Result<f64, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension {
                what: "dense difference",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b).magnitude())
            .fold(0.0, f64::max))
    }

    /// Symmetric permutation `P M Pᵀ` where row/column `perm[i]` of `self`
    /// becomes row/column `i` of the result.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if perm.len() != self.rows {
            return Err(Error::Dimension {
                what: "permutation",
                expected: self.rows,
                found: perm.len(),
            });
        }
        let n = self.rows;
        let mut data = Vec::with_capacity(n * n);
        for &pi in perm {
            for &pj in perm {
                data.push(self[(pi, pj)].clone());
            }
        }
        Ok(DenseMatrix {
            rows: n,
            cols: n,
            data,
        })
    }
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for DenseMatrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}
