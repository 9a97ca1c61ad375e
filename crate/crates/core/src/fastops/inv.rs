use alloc::vec::Vec;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::structured::{ArrowMatrix, Dpr1Matrix, StructuredMatrix};

use super::{scan_zeros, ZeroScan};

/// Inverse of an arrowhead matrix with the tip at position `t`.
///
/// * All `d_l ≠ 0`: a DPR1 matrix. Shaft positions get `d_l⁻¹` on the
///   diagonal, `x̂ = d_l⁻¹ u_l` and `ŷ = d_l^{-⋆} v_l`; the tip position gets
///   `0`, `−1`, `−1`. `ρ̂ = (α − Σ v_l⋆ d_l⁻¹ u_l)⁻¹`.
/// * Exactly one `d_j = 0`: an arrowhead matrix whose tip sits where the zero
///   was, with a zero diagonal entry where the old tip was.
///
/// Fails with [`Error::Singular`] when the Schur complement is zero, when
/// the zero row/column has a zero shaft entry, or when two or more diagonal
/// entries are zero. [`Error::NotRepresentable`] means some nonzero element
/// had no inverse (singular block entries).
pub fn arrow_inv<S: Scalar>(a: &ArrowMatrix<S>, tol: f64) -> Result<StructuredMatrix<S>, Error> {
    match scan_zeros(a.diag(), tol) {
        ZeroScan::None => arrow_inv_to_dpr1(a, tol).map(StructuredMatrix::Dpr1),
        ZeroScan::One(j) => arrow_inv_to_arrow(a, j, tol).map(StructuredMatrix::Arrow),
        ZeroScan::Many => Err(Error::Singular),
    }
}

fn arrow_inv_to_dpr1<S: Scalar>(a: &ArrowMatrix<S>, tol: f64) -> Result<Dpr1Matrix<S>, Error> {
    let (d, u, v, alpha) = (a.diag(), a.u(), a.v(), a.alpha());
    let n = a.n();
    let t = a.tip_index();
    let zero = alpha.zero_like();
    let minus_one = alpha.one_like().neg();

    let mut delta = Vec::with_capacity(n);
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    let mut s = alpha.zero_like();
    for (l, ((dl, ul), vl)) in d.iter().zip(u).zip(v).enumerate() {
        if l == t {
            delta.push(zero.clone());
            x.push(minus_one.clone());
            y.push(minus_one.clone());
        }
        let dinv = dl.inv()?;
        x.push(dinv.mul(ul));
        y.push(dl.conj().inv()?.mul(vl));
        s = s.add(&vl.conj().mul(&dinv).mul(ul));
        delta.push(dinv);
    }
    if t == n - 1 {
        delta.push(zero);
        x.push(minus_one.clone());
        y.push(minus_one);
    }

    let schur = alpha.sub(&s);
    if schur.is_zero(tol) {
        return Err(Error::Singular);
    }
    let rho = schur.inv()?;
    Dpr1Matrix::new(delta, x, y, rho)
}

fn arrow_inv_to_arrow<S: Scalar>(
    a: &ArrowMatrix<S>,
    j: usize,
    tol: f64,
) -> Result<ArrowMatrix<S>, Error> {
    let (d, u, v, alpha) = (a.diag(), a.u(), a.v(), a.alpha());
    if u[j].is_zero(tol) || v[j].is_zero(tol) {
        return Err(Error::Singular);
    }
    let uj_inv = u[j].inv()?;
    let vj_inv = v[j].inv()?;
    let t = a.tip_index();
    let m = d.len();

    // Shaft of the result, in dense order of every position except the zero.
    // The old tip becomes an ordinary shaft position with a zero diagonal.
    let mut d_hat = Vec::with_capacity(m);
    let mut u_hat = Vec::with_capacity(m);
    let mut v_hat = Vec::with_capacity(m);
    let mut inner = alpha.neg();
    for l in 0..m {
        if l == t {
            d_hat.push(alpha.zero_like());
            u_hat.push(uj_inv.clone());
            v_hat.push(vj_inv.clone());
        }
        if l == j {
            continue;
        }
        let dinv = d[l].inv()?;
        u_hat.push(dinv.mul(&u[l]).neg().mul(&uj_inv));
        v_hat.push(d[l].conj().inv()?.mul(&v[l]).neg().mul(&vj_inv));
        inner = inner.add(&v[l].conj().mul(&dinv).mul(&u[l]));
        d_hat.push(dinv);
    }
    if t == m {
        d_hat.push(alpha.zero_like());
        u_hat.push(uj_inv.clone());
        v_hat.push(vj_inv);
    }

    let alpha_hat = v[j].conj().inv()?.mul(&inner).mul(&uj_inv);
    ArrowMatrix::new(d_hat, u_hat, v_hat, alpha_hat, a.shaft_position(j) + 1)
}

/// Inverse of a DPR1 matrix.
///
/// * All `δ_l ≠ 0`: `DPR1(Δ⁻¹, Δ⁻¹x, Δ^{-⋆}y, ρ̂)` with
///   `ρ̂ = −ρ (1 + Σ y_l⋆ δ_l⁻¹ x_l ρ)⁻¹`.
/// * Exactly one `δ_j = 0`: an arrowhead matrix with its tip at `j`.
///
/// Fails with [`Error::Singular`] when `1 + y⋆Δ⁻¹xρ` is zero, when `x_j`,
/// `y_j` or `ρ` is zero in the single-zero case, or with two or more zero
/// diagonal entries.
pub fn dpr1_inv<S: Scalar>(a: &Dpr1Matrix<S>, tol: f64) -> Result<StructuredMatrix<S>, Error> {
    match scan_zeros(a.diag(), tol) {
        ZeroScan::None => dpr1_inv_to_dpr1(a, tol).map(StructuredMatrix::Dpr1),
        ZeroScan::One(j) => dpr1_inv_to_arrow(a, j, tol).map(StructuredMatrix::Arrow),
        ZeroScan::Many => Err(Error::Singular),
    }
}

fn dpr1_inv_to_dpr1<S: Scalar>(a: &Dpr1Matrix<S>, tol: f64) -> Result<Dpr1Matrix<S>, Error> {
    let (d, x, y, rho) = (a.diag(), a.x(), a.y(), a.rho());
    let n = a.n();
    let mut delta = Vec::with_capacity(n);
    let mut x_hat = Vec::with_capacity(n);
    let mut y_hat = Vec::with_capacity(n);
    let mut s = rho.one_like();
    for ((dl, xl), yl) in d.iter().zip(x).zip(y) {
        let dinv = dl.inv()?;
        x_hat.push(dinv.mul(xl));
        y_hat.push(dl.conj().inv()?.mul(yl));
        s = s.add(&yl.conj().mul(&dinv).mul(xl).mul(rho));
        delta.push(dinv);
    }
    if s.is_zero(tol) {
        return Err(Error::Singular);
    }
    let s_inv = s.inv()?;
    #[cfg(not(feature = "commuted-product"))]
    let rho_hat = rho.mul(&s_inv).neg();
    #[cfg(feature = "commuted-product")]
    let rho_hat = s_inv.mul(rho).neg();
    Dpr1Matrix::new(delta, x_hat, y_hat, rho_hat)
}

fn dpr1_inv_to_arrow<S: Scalar>(
    a: &Dpr1Matrix<S>,
    j: usize,
    tol: f64,
) -> Result<ArrowMatrix<S>, Error> {
    let (d, x, y, rho) = (a.diag(), a.x(), a.y(), a.rho());
    if x[j].is_zero(tol) || y[j].is_zero(tol) || rho.is_zero(tol) {
        return Err(Error::Singular);
    }
    let xj_inv = x[j].inv()?;
    let yj_inv = y[j].inv()?;
    let n = a.n();

    let mut d_hat = Vec::with_capacity(n - 1);
    let mut u_hat = Vec::with_capacity(n - 1);
    let mut v_hat = Vec::with_capacity(n - 1);
    let mut inner = rho.inv()?;
    for l in (0..n).filter(|&l| l != j) {
        let dinv = d[l].inv()?;
        u_hat.push(dinv.mul(&x[l]).neg().mul(&xj_inv));
        v_hat.push(d[l].conj().inv()?.mul(&y[l]).neg().mul(&yj_inv));
        inner = inner.add(&y[l].conj().mul(&dinv).mul(&x[l]));
        d_hat.push(dinv);
    }

    let alpha_hat = y[j].conj().inv()?.mul(&inner).mul(&xj_inv);
    ArrowMatrix::new(d_hat, u_hat, v_hat, alpha_hat, j + 1)
}
