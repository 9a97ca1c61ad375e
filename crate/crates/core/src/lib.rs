//! Linear-time kernels for arrowhead and diagonal-plus-rank-one (DPR1) matrices.
//!
//! Every kernel is written once against the [`Scalar`] contract, an associative
//! field element with conjugation and inversion that is *not* assumed to
//! commute. The same code therefore serves real, complex, quaternion and
//! block-matrix entries. Products are evaluated in the exact left-to-right
//! order of the underlying formulas; swapping any factor is a bug for
//! quaternions and blocks.
//!
//! ```
//! use arrowdpr_core::{ArrowMatrix, StructuredMatrix};
//!
//! // [[2, 0, 1], [0, 3, 1], [1, 1, 1]]
//! let a = ArrowMatrix::new(vec![2.0, 3.0], vec![1.0, 1.0], vec![1.0, 1.0], 1.0, 3).unwrap();
//! let det = a.det(0.0).unwrap();
//! assert!((det.value() - 1.0).abs() < 1e-12);
//!
//! let inv = a.inverse(0.0).unwrap();
//! match inv {
//!     StructuredMatrix::Dpr1(b) => assert!((b.rho() - 6.0).abs() < 1e-12),
//!     StructuredMatrix::Arrow(_) => unreachable!(),
//! }
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod block;
pub mod dense;
mod error;
pub mod fastops;
pub mod oracle;
pub mod quaternion;
pub mod scalar;
pub mod structured;

pub use block::Block;
pub use dense::DenseMatrix;
pub use error::{Error, SingularScalar};
pub use fastops::{DetBranch, Determinant};
pub use num_complex::Complex64;
pub use quaternion::Quaternion;
pub use scalar::{BaseScalar, Commutative, Scalar};
pub use structured::{ArrowMatrix, Dpr1Matrix, StructuredInverse, StructuredMatrix};
