//! Fixed quaternion instances that expose any commuted product.
//!
//! Each case is checked against the dense oracle. The entries are chosen so
//! that reversing a single product in the DPR1 determinant, the arrowhead
//! inverse or the DPR1 inverse moves the answer by at least `0.1`.

use arrowdpr_core::oracle::{dense_det_quaternion_magnitude, dense_inv, dense_matvec};
use arrowdpr_core::{ArrowMatrix, Dpr1Matrix, Error, Quaternion};

const fn q(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
    Quaternion::new(a, b, c, d)
}

#[derive(Clone, Debug)]
pub enum Sentinel {
    ArrowMatvec(ArrowMatrix<Quaternion>, Vec<Quaternion>),
    Dpr1Matvec(Dpr1Matrix<Quaternion>, Vec<Quaternion>),
    ArrowDet(ArrowMatrix<Quaternion>),
    Dpr1Det(Dpr1Matrix<Quaternion>),
    ArrowInv(ArrowMatrix<Quaternion>),
    Dpr1Inv(Dpr1Matrix<Quaternion>),
}

pub struct NamedSentinel {
    pub name: &'static str,
    pub case: Sentinel,
}

/// Agreement with the oracle, as a threshold on [`Sentinel::deviation`].
pub const AGREEMENT_TOL: f64 = 1e-12;

pub fn arrow_case() -> ArrowMatrix<Quaternion> {
    ArrowMatrix::new(
        vec![q(1.0, 2.0, 0.0, 1.0), q(0.5, -1.0, 1.0, 0.0)],
        vec![q(0.0, 1.0, -1.0, 2.0), q(1.0, 0.0, 2.0, -1.0)],
        vec![q(2.0, 0.0, 1.0, 1.0), q(-1.0, 1.0, 0.0, 1.5)],
        q(0.5, 1.0, 1.0, -1.0),
        2,
    )
    .expect("valid sentinel")
}

pub fn dpr1_case() -> Dpr1Matrix<Quaternion> {
    Dpr1Matrix::new(
        vec![q(1.0, 1.0, 0.0, 2.0), q(0.5, 0.0, -1.0, 1.0)],
        vec![q(0.0, 2.0, 1.0, -1.0), q(1.0, -1.0, 1.0, 0.0)],
        vec![q(1.0, 0.0, -2.0, 1.0), q(0.0, 1.0, 1.0, 1.0)],
        q(0.5, -1.0, 1.0, 1.0),
    )
    .expect("valid sentinel")
}

pub fn sentinels() -> Vec<NamedSentinel> {
    let (o, i, j, k) = (Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K);
    let z = Quaternion::ZERO;
    let small_arrow = ArrowMatrix::new(vec![i], vec![j], vec![k], o, 2).expect("valid sentinel");
    let small_dpr1 =
        Dpr1Matrix::new(vec![o, o], vec![i, z], vec![j, z], k).expect("valid sentinel");

    let arrow = arrow_case();
    let mut zero_diag = arrow.diag().to_vec();
    zero_diag[1] = z;
    let arrow_zero = ArrowMatrix::new(
        zero_diag,
        arrow.u().to_vec(),
        arrow.v().to_vec(),
        *arrow.alpha(),
        arrow.tip(),
    )
    .expect("valid sentinel");

    let dpr1 = dpr1_case();
    let mut zero_diag = dpr1.diag().to_vec();
    zero_diag[0] = z;
    let dpr1_zero = Dpr1Matrix::new(zero_diag, dpr1.x().to_vec(), dpr1.y().to_vec(), *dpr1.rho())
        .expect("valid sentinel");

    vec![
        NamedSentinel {
            name: "arrow_matvec",
            case: Sentinel::ArrowMatvec(small_arrow, vec![o, i]),
        },
        NamedSentinel {
            name: "dpr1_matvec",
            case: Sentinel::Dpr1Matvec(small_dpr1, vec![o, z]),
        },
        NamedSentinel {
            name: "arrow_matvec_generic",
            case: Sentinel::ArrowMatvec(arrow.clone(), vec![q(1.0, -1.0, 0.5, 2.0), i, j + k]),
        },
        NamedSentinel {
            name: "dpr1_matvec_generic",
            case: Sentinel::Dpr1Matvec(dpr1.clone(), vec![q(0.5, 1.0, -1.0, 0.0), k]),
        },
        NamedSentinel {
            name: "arrow_det",
            case: Sentinel::ArrowDet(arrow.clone()),
        },
        NamedSentinel {
            name: "arrow_det_single_zero",
            case: Sentinel::ArrowDet(arrow_zero.clone()),
        },
        NamedSentinel {
            name: "dpr1_det",
            case: Sentinel::Dpr1Det(dpr1.clone()),
        },
        NamedSentinel {
            name: "dpr1_det_single_zero",
            case: Sentinel::Dpr1Det(dpr1_zero.clone()),
        },
        NamedSentinel {
            name: "arrow_inv",
            case: Sentinel::ArrowInv(arrow),
        },
        NamedSentinel {
            name: "arrow_inv_single_zero",
            case: Sentinel::ArrowInv(arrow_zero),
        },
        NamedSentinel {
            name: "dpr1_inv",
            case: Sentinel::Dpr1Inv(dpr1),
        },
        NamedSentinel {
            name: "dpr1_inv_single_zero",
            case: Sentinel::Dpr1Inv(dpr1_zero),
        },
    ]
}

fn max_abs_diff(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (*x - *y).norm())
        .fold(0.0, f64::max)
}

impl Sentinel {
    /// Largest deviation between the fast kernel and the dense oracle.
    pub fn deviation(&self) -> Result<f64, Error> {
        Ok(match self {
            Sentinel::ArrowMatvec(a, z) => {
                max_abs_diff(&a.matvec(z)?, &dense_matvec(&a.to_dense(), z)?)
            }
            Sentinel::Dpr1Matvec(a, z) => {
                max_abs_diff(&a.matvec(z)?, &dense_matvec(&a.to_dense(), z)?)
            }
            Sentinel::ArrowDet(a) => {
                (a.det(0.0)?.study() - dense_det_quaternion_magnitude(&a.to_dense())?).abs()
            }
            Sentinel::Dpr1Det(a) => {
                (a.det(0.0)?.study() - dense_det_quaternion_magnitude(&a.to_dense())?).abs()
            }
            Sentinel::ArrowInv(a) => a
                .inverse(0.0)?
                .to_dense()
                .max_diff(&dense_inv(&a.to_dense())?)?,
            Sentinel::Dpr1Inv(a) => a
                .inverse(0.0)?
                .to_dense()
                .max_diff(&dense_inv(&a.to_dense())?)?,
        })
    }
}
