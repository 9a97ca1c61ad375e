use alloc::vec::Vec;
use core::iter;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::structured::{ArrowMatrix, Dpr1Matrix};

fn check_vector<S>(z: &[S], n: usize) -> Result<(), Error> {
    if z.len() == n {
        Ok(())
    } else {
        Err(Error::Dimension {
            what: "vector",
            expected: n,
            found: z.len(),
        })
    }
}

/// `w = A z` for an arrowhead matrix with the tip at position `i`:
///
/// ```text
/// w_j = d_j z_j + u_j z_i                     (j < i)
/// w_i = Σ_{j<i} v_j⋆ z_j + α z_i + Σ_{j≥i} v_j⋆ z_{j+1}
/// w_j = u_{j−1} z_i + d_{j−1} z_j             (j > i)
/// ```
pub fn arrow_matvec<S: Scalar>(a: &ArrowMatrix<S>, z: &[S]) -> Result<Vec<S>, Error> {
    let n = a.n();
    check_vector(z, n)?;
    let t = a.tip_index();
    let zt = &z[t];
    let (d, u, v) = (a.diag(), a.u(), a.v());

    let mut w = Vec::with_capacity(n);
    for l in 0..t {
        w.push(d[l].mul(&z[l]).add(&u[l].mul(zt)));
    }

    // Tip row, summed in column order.
    let tip = (0..t)
        .map(|l| v[l].conj().mul(&z[l]))
        .chain(iter::once(a.alpha().mul(zt)))
        .chain((t..n - 1).map(|l| v[l].conj().mul(&z[l + 1])))
        .reduce(|s, term| s.add(&term))
        .expect("tip row has at least the alpha term");
    w.push(tip);

    for l in t..n - 1 {
        w.push(u[l].mul(zt).add(&d[l].mul(&z[l + 1])));
    }
    Ok(w)
}

/// `w = (Δ + x ρ y⋆) z` as `w_i = δ_i z_i + x_i β` with `β = ρ (y⋆ z)`.
pub fn dpr1_matvec<S: Scalar>(a: &Dpr1Matrix<S>, z: &[S]) -> Result<Vec<S>, Error> {
    let n = a.n();
    check_vector(z, n)?;
    let (d, x, y) = (a.diag(), a.x(), a.y());

    let mut dot = y[0].conj().mul(&z[0]);
    for (yl, zl) in y.iter().zip(z).skip(1) {
        dot = dot.add(&yl.conj().mul(zl));
    }
    let beta = a.rho().mul(&dot);

    Ok(d.iter()
        .zip(x)
        .zip(z)
        .map(|((dl, xl), zl)| dl.mul(zl).add(&xl.mul(&beta)))
        .collect())
}
