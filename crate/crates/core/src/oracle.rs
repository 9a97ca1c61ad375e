//! Slow dense reference implementations.
//!
//! Nothing here knows about arrowhead or DPR1 structure; the only thing
//! shared with the fast kernels is the [`Scalar`] contract. Use these to
//! check [`crate::fastops`], never the other way round.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::block::Block;
use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::scalar::{BaseScalar, Commutative, Scalar};

fn require_square<S: Scalar>(m: &DenseMatrix<S>) -> Result<usize, Error> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// `w_i = Σ_j M_ij · z_j`, summed in index order with the matrix entry on
/// the left.
pub fn dense_matvec<S: Scalar>(m: &DenseMatrix<S>, z: &[S]) -> Result<Vec<S>, Error> {
    if z.len() != m.cols() {
        return Err(Error::Dimension {
            what: "vector",
            expected: m.cols(),
            found: z.len(),
        });
    }
    if m.cols() == 0 {
        return Err(Error::Empty);
    }
    Ok((0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let mut acc = row[0].mul(&z[0]);
            for (a, b) in row.iter().zip(z).skip(1) {
                acc = acc.add(&a.mul(b));
            }
            acc
        })
        .collect())
}

/// Matrix product `A · B`.
pub fn dense_mul<S: Scalar>(
    a: &DenseMatrix<S>,
    b: &DenseMatrix<S>,
) -> Result<DenseMatrix<S>, Error> {
    if a.cols() != b.rows() {
        return Err(Error::Dimension {
            what: "product inner dimension",
            expected: a.cols(),
            found: b.rows(),
        });
    }
    if a.cols() == 0 {
        return Err(Error::Empty);
    }
    let mut data = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = a[(i, 0)].mul(&b[(0, j)]);
            for l in 1..a.cols() {
                acc = acc.add(&a[(i, l)].mul(&b[(l, j)]));
            }
            data.push(acc);
        }
    }
    DenseMatrix::from_vec(a.rows(), b.cols(), data)
}

fn pivot_row<S: Scalar>(a: &DenseMatrix<S>, col: usize) -> (usize, f64) {
    (col..a.rows())
        .map(|r| (r, a[(r, col)].magnitude()))
        .fold(
            (col, -1.0),
            |best, cur| if cur.1 > best.1 { cur } else { best },
        )
}

fn swap_rows<S: Scalar>(a: &mut DenseMatrix<S>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..a.cols() {
        let tmp = a[(r1, c)].clone();
        a[(r1, c)] = a[(r2, c)].clone();
        a[(r2, c)] = tmp;
    }
}

/// Determinant by LU factorization with partial pivoting: the sign of the
/// row permutation times the product of pivots.
pub fn dense_det<S: Commutative>(m: &DenseMatrix<S>) -> Result<S, Error> {
    let n = require_square(m)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut a = m.clone();
    let mut det = a[(0, 0)].one_like();
    for col in 0..n {
        let (p, _) = pivot_row(&a, col);
        if a[(p, col)].is_exact_zero() {
            return Ok(det.zero_like());
        }
        if p != col {
            swap_rows(&mut a, p, col);
            det = det.neg();
        }
        let pivot = a[(col, col)].clone();
        let pinv = pivot.inv().map_err(|_| Error::Singular)?;
        det = det.mul(&pivot);
        for r in col + 1..n {
            let factor = a[(r, col)].mul(&pinv);
            if factor.is_exact_zero() {
                continue;
            }
            for c in col + 1..n {
                let t = factor.mul(&a[(col, c)]);
                a[(r, c)] = a[(r, c)].sub(&t);
            }
        }
    }
    Ok(det)
}

/// The `2n × 2n` complex image of a quaternion matrix, each entry replaced
/// by its `2×2` embedding.
pub fn embed_quaternion_matrix(m: &DenseMatrix<Quaternion>) -> DenseMatrix<Complex64> {
    let (r, c) = (m.rows(), m.cols());
    let mut out = DenseMatrix::zeros_like(2 * r, 2 * c, &Complex64::new(0.0, 0.0));
    for i in 0..r {
        for j in 0..c {
            let e = m[(i, j)].embed();
            for (a, row) in e.iter().enumerate() {
                for (b, z) in row.iter().enumerate() {
                    out[(2 * i + a, 2 * j + b)] = *z;
                }
            }
        }
    }
    out
}

/// `|det(M)|` for a quaternion matrix, as `sqrt` of the determinant of its
/// complex image. That determinant is real and nonnegative in exact
/// arithmetic; an imaginary part above `1e-9` (relative) is reported as
/// [`Error::NonRealDeterminant`].
pub fn dense_det_quaternion_magnitude(m: &DenseMatrix<Quaternion>) -> Result<f64, Error> {
    require_square(m)?;
    let det = dense_det(&embed_quaternion_matrix(m))?;
    if det.im.abs() > 1e-9 * det.re.abs().max(1.0) {
        return Err(Error::NonRealDeterminant);
    }
    Ok(libm::sqrt(det.re.max(0.0)))
}

/// Inverse by Gauss–Jordan elimination with partial pivoting on entry
/// magnitude. Every row operation multiplies from the left, so the result
/// is correct for noncommutative scalars.
pub fn dense_inv<S: Scalar>(m: &DenseMatrix<S>) -> Result<DenseMatrix<S>, Error> {
    let n = require_square(m)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    let threshold = n as f64 * f64::EPSILON * m.max_norm();
    let mut a = m.clone();
    let mut out = DenseMatrix::identity_like(n, &m[(0, 0)]);
    for col in 0..n {
        let (p, mag) = pivot_row(&a, col);
        if mag <= threshold || !mag.is_finite() {
            return Err(Error::Singular);
        }
        swap_rows(&mut a, p, col);
        swap_rows(&mut out, p, col);
        let pinv = a[(col, col)].inv().map_err(|_| Error::Singular)?;
        for c in 0..n {
            a[(col, c)] = pinv.mul(&a[(col, c)]);
            out[(col, c)] = pinv.mul(&out[(col, c)]);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[(r, col)].clone();
            if factor.is_exact_zero() {
                continue;
            }
            for c in 0..n {
                let ta = factor.mul(&a[(col, c)]);
                a[(r, c)] = a[(r, c)].sub(&ta);
                let to = factor.mul(&out[(col, c)]);
                out[(r, c)] = out[(r, c)].sub(&to);
            }
        }
    }
    Ok(out)
}

/// Flattens a matrix of `k×k` blocks into an `nk × mk` matrix of base
/// scalars.
pub fn expand_block<B: BaseScalar>(m: &DenseMatrix<Block<B>>) -> Result<DenseMatrix<B>, Error> {
    let k = match m.entries().first() {
        Some(b) => b.k(),
        None => return Err(Error::Empty),
    };
    if m.entries().iter().any(|b| b.k() != k) {
        return Err(Error::ShapeMismatch { what: "blocks" });
    }
    let mut out = DenseMatrix::zeros_like(m.rows() * k, m.cols() * k, &B::zero());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let b = &m[(i, j)];
            for r in 0..k {
                for c in 0..k {
                    out[(i * k + r, j * k + c)] = b.get(r, c);
                }
            }
        }
    }
    Ok(out)
}
