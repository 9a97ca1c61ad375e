#![allow(dead_code)]

use arrowdpr_core::{ArrowMatrix, Block, Complex64, DenseMatrix, Dpr1Matrix, Quaternion, Scalar};
use proptest::prelude::*;

/// Scalars that can be assembled from a flat slice of reals.
pub trait FromParts: Scalar {
    const WIDTH: usize;
    fn from_parts(p: &[f64]) -> Self;
}

impl FromParts for f64 {
    const WIDTH: usize = 1;
    fn from_parts(p: &[f64]) -> Self {
        p[0]
    }
}

impl FromParts for Complex64 {
    const WIDTH: usize = 2;
    fn from_parts(p: &[f64]) -> Self {
        Complex64::new(p[0], p[1])
    }
}

impl FromParts for Quaternion {
    const WIDTH: usize = 4;
    fn from_parts(p: &[f64]) -> Self {
        Quaternion::new(p[0], p[1], p[2], p[3])
    }
}

/// 2×2 real blocks, shifted towards the identity so they are invertible.
pub type RealBlock = Block<f64>;

impl FromParts for RealBlock {
    const WIDTH: usize = 4;
    fn from_parts(p: &[f64]) -> Self {
        Block::new(2, vec![p[0] + 2.0, p[1], p[2], p[3] + 2.0]).unwrap()
    }
}

/// 2×2 quaternion blocks.
pub type QuatBlock = Block<Quaternion>;

impl FromParts for QuatBlock {
    const WIDTH: usize = 16;
    fn from_parts(p: &[f64]) -> Self {
        let q = |o: usize| Quaternion::new(p[o], p[o + 1], p[o + 2], p[o + 3]);
        let two = Quaternion::from_real(2.0);
        Block::new(2, vec![q(0) + two, q(4), q(8), q(12) + two]).unwrap()
    }
}

pub fn elems<S: FromParts>(flat: &[f64], count: usize) -> Vec<S> {
    flat.chunks(S::WIDTH)
        .take(count)
        .map(S::from_parts)
        .collect()
}

/// Arrow of size `n` with entries in [-1, 1]; diagonal entries pushed away
/// from zero unless `zero` names a shaft index to zero out.
pub fn arrow_strategy<S: FromParts>(with_zero: bool) -> impl Strategy<Value = ArrowMatrix<S>> {
    (1usize..=12).prop_flat_map(move |m| {
        let n = m + 1;
        (
            prop::collection::vec(-1.0f64..1.0, (3 * m + 1) * S::WIDTH),
            1..=n,
            0..m,
            prop::collection::vec(prop::bool::ANY, m),
        )
            .prop_map(move |(flat, tip, zero_at, signs)| {
                let e: Vec<S> = elems(&flat, 3 * m + 1);
                let one = e[0].one_like();
                let mut diag: Vec<S> = e[..m]
                    .iter()
                    .zip(&signs)
                    .map(|(d, &s)| {
                        let shifted = d.add(&one);
                        if s {
                            shifted
                        } else {
                            shifted.neg()
                        }
                    })
                    .collect();
                if with_zero {
                    diag[zero_at] = one.zero_like();
                }
                ArrowMatrix::new(
                    diag,
                    e[m..2 * m].to_vec(),
                    e[2 * m..3 * m].to_vec(),
                    e[3 * m].clone(),
                    tip,
                )
                .unwrap()
            })
    })
}

pub fn dpr1_strategy<S: FromParts>(with_zero: bool) -> impl Strategy<Value = Dpr1Matrix<S>> {
    (1usize..=12).prop_flat_map(move |n| {
        (
            prop::collection::vec(-1.0f64..1.0, (3 * n + 1) * S::WIDTH),
            0..n,
            prop::collection::vec(prop::bool::ANY, n),
        )
            .prop_map(move |(flat, zero_at, signs)| {
                let e: Vec<S> = elems(&flat, 3 * n + 1);
                let one = e[0].one_like();
                let mut diag: Vec<S> = e[..n]
                    .iter()
                    .zip(&signs)
                    .map(|(d, &s)| {
                        let shifted = d.add(&one);
                        if s {
                            shifted
                        } else {
                            shifted.neg()
                        }
                    })
                    .collect();
                if with_zero {
                    diag[zero_at] = one.zero_like();
                }
                Dpr1Matrix::new(
                    diag,
                    e[n..2 * n].to_vec(),
                    e[2 * n..3 * n].to_vec(),
                    e[3 * n].clone(),
                )
                .unwrap()
            })
    })
}

pub fn vector_strategy<S: FromParts>(n: usize) -> impl Strategy<Value = Vec<S>> {
    prop::collection::vec(-1.0f64..1.0, n * S::WIDTH).prop_map(move |flat| elems(&flat, n))
}

/// Componentwise relative error of `w` against `A z` computed densely, each
/// row scaled by `Σ_j |A_ij| |z_j|`.
pub fn matvec_rel_err<S: Scalar>(a: &DenseMatrix<S>, z: &[S], w: &[S], reference: &[S]) -> f64 {
    (0..a.rows())
        .map(|i| {
            let scale: f64 = a
                .row(i)
                .iter()
                .zip(z)
                .map(|(m, zj)| m.magnitude() * zj.magnitude())
                .sum();
            let err = w[i].sub(&reference[i]).magnitude();
            if scale == 0.0 {
                err
            } else {
                err / scale
            }
        })
        .fold(0.0, f64::max)
}

pub fn identity_residual<S: Scalar>(a: &DenseMatrix<S>, b: &DenseMatrix<S>) -> f64 {
    let id = DenseMatrix::identity_like(a.rows(), &a[(0, 0)]);
    arrowdpr_core::oracle::dense_mul(a, b)
        .unwrap()
        .max_diff(&id)
        .unwrap()
}
