//! Hamilton quaternions over `f64`.

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::SingularScalar;
use crate::scalar::{BaseScalar, Scalar};

/// `q = re + i·𝐢 + j·𝐣 + k·𝐤` with `𝐢² = 𝐣² = 𝐤² = 𝐢𝐣𝐤 = −1`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub re: f64,
    pub i: f64,
    pub j: f64,
    pub k: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(re: f64, i: f64, j: f64, k: f64) -> Self {
        Quaternion { re, i, j, k }
    }

    pub const fn from_real(re: f64) -> Self {
        Quaternion::new(re, 0.0, 0.0, 0.0)
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.re, self.i, self.j, self.k]
    }

    /// Hamilton product `self · rhs`.
    pub fn hamilton(self, rhs: Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (self.re, self.i, self.j, self.k);
        let (a2, b2, c2, d2) = (rhs.re, rhs.i, rhs.j, rhs.k);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    pub fn conjugate(self) -> Quaternion {
        Quaternion::new(self.re, -self.i, -self.j, -self.k)
    }

    /// `|q|²`, computed directly (may underflow for tiny components).
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.i * self.i + self.j * self.j + self.k * self.k
    }

    pub fn norm(self) -> f64 {
        let s = self.max_component();
        if s == 0.0 || !s.is_finite() {
            return s;
        }
        let q = self.scale(1.0 / s);
        s * libm::sqrt(q.norm_sqr())
    }

    /// `conj(q) / |q|²`.
    pub fn inverse(self) -> Result<Quaternion, SingularScalar> {
        let s = self.max_component();
        if s == 0.0 {
            return Err(SingularScalar);
        }
        let q = self.scale(1.0 / s);
        Ok(q.conjugate().scale(1.0 / (s * q.norm_sqr())))
    }

    pub fn scale(self, f: f64) -> Quaternion {
        Quaternion::new(self.re * f, self.i * f, self.j * f, self.k * f)
    }

    /// Image in `C^{2×2}` under `q ↦ [[re + i𝑖, j + k𝑖], [−j + k𝑖, re − i𝑖]]`.
    /// This map is a ring homomorphism.
    pub fn embed(self) -> [[Complex64; 2]; 2] {
        [
            [
                Complex64::new(self.re, self.i),
                Complex64::new(self.j, self.k),
            ],
            [
                Complex64::new(-self.j, self.k),
                Complex64::new(self.re, -self.i),
            ],
        ]
    }

    fn max_component(self) -> f64 {
        self.re
            .abs()
            .max(self.i.abs())
            .max(self.j.abs())
            .max(self.k.abs())
    }
}

impl From<f64> for Quaternion {
    fn from(re: f64) -> Self {
        Quaternion::from_real(re)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.re + rhs.re,
            self.i + rhs.i,
            self.j + rhs.j,
            self.k + rhs.k,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.re - rhs.re,
            self.i - rhs.i,
            self.j - rhs.j,
            self.k - rhs.k,
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        self.hamilton(rhs)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.re, -self.i, -self.j, -self.k)
    }
}

impl Scalar for Quaternion {
    fn zero_like(&self) -> Self {
        Quaternion::ZERO
    }
    fn one_like(&self) -> Self {
        Quaternion::ONE
    }
    fn add(&self, rhs: &Self) -> Self {
        *self + *rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        *self - *rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.hamilton(*rhs)
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn conj(&self) -> Self {
        self.conjugate()
    }
    fn inv(&self) -> Result<Self, SingularScalar> {
        self.inverse()
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_exact_zero(&self) -> bool {
        self.re == 0.0 && self.i == 0.0 && self.j == 0.0 && self.k == 0.0
    }
}

impl BaseScalar for Quaternion {
    fn zero() -> Self {
        Quaternion::ZERO
    }
    fn one() -> Self {
        Quaternion::ONE
    }
    fn from_real(r: f64) -> Self {
        Quaternion::from_real(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Quaternion = Quaternion::new(1.0, 2.0, 3.0, 4.0);

    fn close(p: Quaternion, q: Quaternion, tol: f64) -> bool {
        let d = p - q;
        d.re.abs() <= tol && d.i.abs() <= tol && d.j.abs() <= tol && d.k.abs() <= tol
    }

    fn quat() -> impl Strategy<Value = Quaternion> {
        [-1.0f64..1.0, -1.0..1.0, -1.0..1.0, -1.0..1.0]
            .prop_map(|[a, b, c, d]| Quaternion::new(a, b, c, d))
    }

    #[test]
    fn multiplication_table() {
        let (one, i, j, k) = (Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K);
        let table = [
            [(i, i, -one), (i, j, k), (i, k, -j)],
            [(j, i, -k), (j, j, -one), (j, k, i)],
            [(k, i, j), (k, j, -i), (k, k, -one)],
        ];
        for row in table {
            for (p, q, r) in row {
                assert_eq!(p * q, r);
            }
        }
        assert_eq!(Q * one, Q);
        assert_eq!(one * Q, Q);
    }

    #[test]
    fn conjugation() {
        assert_eq!(Q.conjugate(), Quaternion::new(1.0, -2.0, -3.0, -4.0));
        assert_eq!(
            Quaternion::from_real(5.0).conjugate(),
            Quaternion::from_real(5.0)
        );
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(q * q.conjugate(), Quaternion::from_real(4.0));
        assert_eq!(q.conjugate() * q, Quaternion::from_real(4.0));
    }

    #[test]
    fn inverse() {
        assert_eq!(
            Quaternion::from_real(2.0).inverse(),
            Ok(Quaternion::from_real(0.5))
        );
        assert_eq!(Quaternion::I.inverse(), Ok(-Quaternion::I));
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        let qi = q.inverse().unwrap();
        assert_eq!(qi, Quaternion::new(0.25, -0.25, -0.25, -0.25));
        assert!(close(q * qi, Quaternion::ONE, 1e-14));
        assert!(close(qi * q, Quaternion::ONE, 1e-14));
        assert_eq!(Quaternion::ZERO.inverse(), Err(SingularScalar));
    }

    #[test]
    fn embedding() {
        let one = Quaternion::ONE.embed();
        assert_eq!(one[0][0], Complex64::new(1.0, 0.0));
        assert_eq!(one[0][1], Complex64::new(0.0, 0.0));
        assert_eq!(one[1][0], Complex64::new(0.0, 0.0));
        assert_eq!(one[1][1], Complex64::new(1.0, 0.0));
        let i = Quaternion::I.embed();
        assert_eq!(i[0][0], Complex64::new(0.0, 1.0));
        assert_eq!(i[1][1], Complex64::new(0.0, -1.0));
        assert_eq!(i[0][1], Complex64::new(0.0, 0.0));
        assert_eq!(i[1][0], Complex64::new(0.0, 0.0));
        let m = Q.embed();
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        assert_eq!(det, Complex64::new(30.0, 0.0));
    }

    #[test]
    fn norm_survives_extreme_scales() {
        let tiny = Quaternion::new(3e-200, 4e-200, 0.0, 0.0);
        assert!((tiny.norm() - 5e-200).abs() < 1e-213);
        let huge = Quaternion::new(3e200, 4e200, 0.0, 0.0);
        assert!((huge.norm() - 5e200).abs() < 1e187);
        assert!(tiny.inverse().is_ok());
    }

    proptest! {
        #[test]
        fn associative(p in quat(), q in quat(), r in quat()) {
            prop_assert!(close((p * q) * r, p * (q * r), 1e-13));
        }

        #[test]
        fn conjugation_reverses_products(p in quat(), q in quat()) {
            prop_assert!(close((p * q).conjugate(), q.conjugate() * p.conjugate(), 1e-14));
        }

        #[test]
        fn embed_is_homomorphism(p in quat(), q in quat()) {
            let lhs = (p * q).embed();
            let (a, b) = (p.embed(), q.embed());
            for r in 0..2 {
                for c in 0..2 {
                    let rhs = a[r][0] * b[0][c] + a[r][1] * b[1][c];
                    prop_assert!((lhs[r][c] - rhs).norm_sqr().sqrt() <= 1e-13);
                }
            }
        }
    }
}
