//! Square dense blocks used as matrix elements.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, SingularScalar};
use crate::scalar::{BaseScalar, Scalar};

/// A `k×k` row-major matrix over a base scalar, itself a [`Scalar`]:
/// `conj` is the conjugate transpose and `inv` the matrix inverse.
///
/// Arithmetic between blocks of different sizes panics; structured
/// containers reject such mixes at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Block<B> {
    k: usize,
    data: Vec<B>,
}

impl<B: BaseScalar> Block<B> {
    pub fn new(k: usize, data: Vec<B>) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::Empty);
        }
        if data.len() != k * k {
            return Err(Error::Dimension {
                what: "block entries",
                expected: k * k,
                found: data.len(),
            });
        }
        Ok(Block { k, data })
    }

    pub fn from_rows(rows: &[Vec<B>]) -> Result<Self, Error> {
        let k = rows.len();
        let mut data = Vec::with_capacity(k * k);
        for row in rows {
            if row.len() != k {
                return Err(Error::Dimension {
                    what: "block row",
                    expected: k,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Block::new(k, data)
    }

    pub fn zeros(k: usize) -> Self {
        Block {
            k,
            data: vec![B::zero(); k * k],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut b = Block::zeros(k);
        for i in 0..k {
            b.data[i * k + i] = B::one();
        }
        b
    }

    pub fn from_diagonal(diag: &[B]) -> Self {
        let k = diag.len();
        let mut b = Block::zeros(k);
        for (i, d) in diag.iter().enumerate() {
            b.data[i * k + i] = *d;
        }
        b
    }

    /// `s · I`.
    pub fn scalar(k: usize, s: B) -> Self {
        let mut b = Block::zeros(k);
        for i in 0..k {
            b.data[i * k + i] = s;
        }
        b
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, row: usize, col: usize) -> B {
        self.data[row * self.k + col]
    }

    pub fn entries(&self) -> &[B] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[B]> {
        self.data.chunks(self.k)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&B, &B) -> B) -> Self {
        assert_eq!(self.k, rhs.k, "block size mismatch");
        Block {
            k: self.k,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Gauss–Jordan elimination with partial pivoting on entry magnitude.
    /// Row operations are applied from the left, so this is valid for
    /// quaternion entries as well.
    fn gauss_jordan_inverse(&self) -> Result<Self, SingularScalar> {
        let k = self.k;
        let frob = self.magnitude();
        if frob == 0.0 || !frob.is_finite() {
            return Err(SingularScalar);
        }
        let threshold = k as f64 * f64::EPSILON * frob;
        let mut a = self.data.clone();
        let mut out = Block::<B>::identity(k).data;
        for col in 0..k {
            let (pivot_row, pivot_mag) =
                (col..k)
                    .map(|r| (r, a[r * k + col].magnitude()))
                    .fold(
                        (col, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot_mag <= threshold {
                return Err(SingularScalar);
            }
            if pivot_row != col {
                for c in 0..k {
                    a.swap(col * k + c, pivot_row * k + c);
                    out.swap(col * k + c, pivot_row * k + c);
                }
            }
            let p_inv = a[col * k + col].inv()?;
            for c in 0..k {
                a[col * k + c] = p_inv.mul(&a[col * k + c]);
                out[col * k + c] = p_inv.mul(&out[col * k + c]);
            }
            for r in 0..k {
                if r == col {
                    continue;
                }
                let factor = a[r * k + col];
                if factor.is_exact_zero() {
                    continue;
                }
                for c in 0..k {
                    a[r * k + c] = a[r * k + c].sub(&factor.mul(&a[col * k + c]));
                    out[r * k + c] = out[r * k + c].sub(&factor.mul(&out[col * k + c]));
                }
            }
        }
        Ok(Block { k, data: out })
    }
}

impl<B: BaseScalar> Scalar for Block<B> {
    fn zero_like(&self) -> Self {
        Block::zeros(self.k)
    }

    fn one_like(&self) -> Self {
        Block::identity(self.k)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.add(b))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.sub(b))
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "block size mismatch");
        let k = self.k;
        let mut data = Vec::with_capacity(k * k);
        for r in 0..k {
            for c in 0..k {
                let mut acc = self.data[r * k].mul(&rhs.data[c]);
                for l in 1..k {
                    acc = acc.add(&self.data[r * k + l].mul(&rhs.data[l * k + c]));
                }
                data.push(acc);
            }
        }
        Block { k, data }
    }

    fn neg(&self) -> Self {
        Block {
            k: self.k,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    fn conj(&self) -> Self {
        let k = self.k;
        let mut data = Vec::with_capacity(k * k);
        for r in 0..k {
            for c in 0..k {
                data.push(self.data[c * k + r].conj());
            }
        }
        Block { k, data }
    }

    fn inv(&self) -> Result<Self, SingularScalar> {
        self.gauss_jordan_inverse()
    }

    /// Frobenius norm, accumulated with a running scale so it neither
    /// overflows nor underflows.
    fn magnitude(&self) -> f64 {
        let mut scale = 0.0f64;
        let mut ssq = 1.0f64;
        for a in &self.data {
            let m = a.magnitude();
            if m == 0.0 {
                continue;
            }
            if !m.is_finite() {
                return m;
            }
            if m > scale {
                ssq = 1.0 + ssq * (scale / m) * (scale / m);
                scale = m;
            } else {
                ssq += (m / scale) * (m / scale);
            }
        }
        scale * libm::sqrt(ssq)
    }

    fn is_exact_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_exact_zero())
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.k == other.k
    }
}
