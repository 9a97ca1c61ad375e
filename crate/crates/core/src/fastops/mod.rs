//! The linear-time kernels: matrix-vector products, determinants and
//! inverses of arrowhead and DPR1 matrices.
//!
//! All functions take a zero tolerance `tol` where they branch on a diagonal
//! entry being zero; `0.0` means exact comparison (see [`Scalar::is_zero`]).
//! Near-zero entries above the tolerance take the nonzero branch.

mod det;
mod inv;
mod matvec;

use alloc::vec::Vec;

pub use det::{arrow_det, dpr1_det, DetBranch, Determinant};
pub use inv::{arrow_inv, dpr1_inv};
pub use matvec::{arrow_matvec, dpr1_matvec};

use crate::error::Error;
use crate::scalar::Scalar;
use crate::structured::{ArrowMatrix, Dpr1Matrix, StructuredMatrix};

enum ZeroScan {
    None,
    One(usize),
    Many,
}

fn scan_zeros<S: Scalar>(diag: &[S], tol: f64) -> ZeroScan {
    let mut found = ZeroScan::None;
    for (l, d) in diag.iter().enumerate() {
        if d.is_zero(tol) {
            found = match found {
                ZeroScan::None => ZeroScan::One(l),
                _ => return ZeroScan::Many,
            };
        }
    }
    found
}

/// `((s_0 · s_1) · s_2) · …`, or `one` for an empty slice.
fn ordered_product<S: Scalar>(items: &[S], one: S) -> S {
    items.iter().fold(one, |acc, s| acc.mul(s))
}

impl<S: Scalar> ArrowMatrix<S> {
    pub fn matvec(&self, z: &[S]) -> Result<Vec<S>, Error> {
        arrow_matvec(self, z)
    }

    pub fn det(&self, tol: f64) -> Result<Determinant<S>, Error> {
        arrow_det(self, tol)
    }

    pub fn inverse(&self, tol: f64) -> Result<StructuredMatrix<S>, Error> {
        arrow_inv(self, tol)
    }
}

impl<S: Scalar> Dpr1Matrix<S> {
    pub fn matvec(&self, z: &[S]) -> Result<Vec<S>, Error> {
        dpr1_matvec(self, z)
    }

    pub fn det(&self, tol: f64) -> Result<Determinant<S>, Error> {
        dpr1_det(self, tol)
    }

    pub fn inverse(&self, tol: f64) -> Result<StructuredMatrix<S>, Error> {
        dpr1_inv(self, tol)
    }
}

impl<S: Scalar> StructuredMatrix<S> {
    pub fn matvec(&self, z: &[S]) -> Result<Vec<S>, Error> {
        match self {
            StructuredMatrix::Arrow(a) => arrow_matvec(a, z),
            StructuredMatrix::Dpr1(a) => dpr1_matvec(a, z),
        }
    }

    pub fn det(&self, tol: f64) -> Result<Determinant<S>, Error> {
        match self {
            StructuredMatrix::Arrow(a) => arrow_det(a, tol),
            StructuredMatrix::Dpr1(a) => dpr1_det(a, tol),
        }
    }

    pub fn inverse(&self, tol: f64) -> Result<StructuredMatrix<S>, Error> {
        match self {
            StructuredMatrix::Arrow(a) => arrow_inv(a, tol),
            StructuredMatrix::Dpr1(a) => dpr1_inv(a, tol),
        }
    }
}
