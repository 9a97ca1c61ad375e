//! The associative-field contract every kernel is written against.

use core::fmt::Debug;

use num_complex::Complex64;

use crate::error::SingularScalar;

/// An element of an associative (possibly noncommutative) division algebra,
/// or a square block over one.
///
/// Multiplication is never assumed to commute. `conj` is the `⋆` operation:
/// plain identity for reals, complex or quaternion conjugation, conjugate
/// transpose for blocks. It reverses products: `conj(ab) = conj(b) conj(a)`.
///
/// Zero and one are produced from an existing element because block
/// elements carry their size at runtime.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    /// `self · rhs`, in that order.
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// Two-sided inverse.
    fn inv(&self) -> Result<Self, SingularScalar>;

    /// Absolute value, modulus, quaternion norm or Frobenius norm.
    fn magnitude(&self) -> f64;

    /// True when every component is exactly zero.
    fn is_exact_zero(&self) -> bool;

    /// Zero test used by every branch in the kernels. `tol == 0` is an exact
    /// comparison; otherwise the magnitude is compared against `tol`.
    fn is_zero(&self, tol: f64) -> bool {
        if tol > 0.0 {
            self.magnitude() <= tol
        } else {
            self.is_exact_zero()
        }
    }

    /// Whether two elements can be combined. Always true except for blocks
    /// of different sizes.
    fn same_shape(&self, _other: &Self) -> bool {
        true
    }
}

/// Marker for scalars whose multiplication commutes, where a determinant
/// value (not just its magnitude) is meaningful.
pub trait Commutative: Scalar {}

/// Fixed-size scalars usable as block entries.
pub trait BaseScalar: Scalar + Copy {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: f64) -> Self;
}

impl Scalar for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn one_like(&self) -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        *self
    }
    fn inv(&self) -> Result<Self, SingularScalar> {
        if *self == 0.0 {
            Err(SingularScalar)
        } else {
            Ok(1.0 / self)
        }
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Commutative for f64 {}

impl BaseScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_real(r: f64) -> Self {
        r
    }
}

impl Scalar for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::new(self.re, -self.im)
    }
    fn inv(&self) -> Result<Self, SingularScalar> {
        if self.is_exact_zero() {
            return Err(SingularScalar);
        }
        // Scale first so |z|^2 neither overflows nor underflows.
        let s = self.re.abs().max(self.im.abs());
        let (re, im) = (self.re / s, self.im / s);
        let d = s * (re * re + im * im);
        Ok(Complex64::new(re / d, -im / d))
    }
    fn magnitude(&self) -> f64 {
        libm::hypot(self.re, self.im)
    }
    fn is_exact_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl Commutative for Complex64 {}

impl BaseScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_real(r: f64) -> Self {
        Complex64::new(r, 0.0)
    }
}
