use crate::block::Block;
use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::oracle;
use crate::quaternion::Quaternion;
use crate::scalar::{BaseScalar, Commutative, Scalar};
use crate::structured::{ArrowMatrix, Dpr1Matrix};

use super::{ordered_product, scan_zeros, ZeroScan};

/// Which determinant formula produced a [`Determinant`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetBranch {
    /// Every diagonal entry is nonzero.
    NonzeroDiagonal,
    /// Exactly one diagonal entry is zero; `position` is its 1-based row in
    /// the dense matrix.
    SingleZero { position: usize },
    /// Two or more zero diagonal entries; the matrix is singular.
    MultipleZeros,
}

/// Result of a fast determinant.
///
/// Over commutative scalars the value itself is available. For quaternion
/// matrices only the Study determinant `|det A|` is meaningful, so that is
/// all [`Determinant<Quaternion>`] exposes. Block determinants are `k×k`
/// blocks that still need one dense determinant to become a number.
#[derive(Clone, Debug, PartialEq)]
pub struct Determinant<S> {
    raw: S,
    branch: DetBranch,
}

impl<S> Determinant<S> {
    pub fn branch(&self) -> DetBranch {
        self.branch
    }
}

impl<S: Commutative> Determinant<S> {
    pub fn value(&self) -> &S {
        &self.raw
    }

    pub fn into_value(self) -> S {
        self.raw
    }
}

impl Determinant<Quaternion> {
    /// `|det A|`.
    pub fn study(&self) -> f64 {
        self.raw.norm()
    }
}

impl<B: BaseScalar> Determinant<Block<B>> {
    /// The `k×k` block the formulas evaluate to.
    pub fn block(&self) -> &Block<B> {
        &self.raw
    }

    fn block_dense(&self) -> DenseMatrix<B> {
        let k = self.raw.k();
        DenseMatrix::from_vec(k, k, self.raw.entries().to_vec()).expect("block is k×k")
    }
}

impl<B: BaseScalar + Commutative> Determinant<Block<B>> {
    /// Determinant of the full `nk × nk` matrix, via a dense LU of the block.
    pub fn reduce(&self) -> B {
        oracle::dense_det(&self.block_dense()).expect("block is square and nonempty")
    }
}

impl Determinant<Block<Quaternion>> {
    /// `|det A|` of the full `nk × nk` quaternion matrix.
    pub fn study(&self) -> Result<f64, Error> {
        oracle::dense_det_quaternion_magnitude(&self.block_dense())
    }
}

/// `det A` for an arrowhead matrix.
///
/// With all `d_l ≠ 0` this is `(Π d_l)(α − Σ v_l⋆ d_l⁻¹ u_l)`. With a single
/// `d_i = 0` it is `−(Π_{l<i} d_l) v_i⋆ (Π_{l>i} d_l) u_i`. Two or more zero
/// diagonal entries give exactly zero. The tip position does not matter: a
/// symmetric permutation leaves the determinant unchanged.
///
/// Only block entries can fail, with [`Error::NotRepresentable`], when a
/// nonzero diagonal block is singular.
pub fn arrow_det<S: Scalar>(a: &ArrowMatrix<S>, tol: f64) -> Result<Determinant<S>, Error> {
    let (d, u, v, alpha) = (a.diag(), a.u(), a.v(), a.alpha());
    let one = alpha.one_like();
    let (raw, branch) = match scan_zeros(d, tol) {
        ZeroScan::None => {
            let mut s = alpha.zero_like();
            for ((dl, ul), vl) in d.iter().zip(u).zip(v) {
                s = s.add(&vl.conj().mul(&dl.inv()?).mul(ul));
            }
            let prod = ordered_product(d, one);
            (prod.mul(&alpha.sub(&s)), DetBranch::NonzeroDiagonal)
        }
        ZeroScan::One(i) => {
            let raw = ordered_product(&d[..i], one.clone())
                .mul(&v[i].conj())
                .mul(&ordered_product(&d[i + 1..], one))
                .mul(&u[i])
                .neg();
            let position = a.shaft_position(i) + 1;
            (raw, DetBranch::SingleZero { position })
        }
        ZeroScan::Many => (alpha.zero_like(), DetBranch::MultipleZeros),
    };
    Ok(Determinant { raw, branch })
}

/// `det A` for a DPR1 matrix.
///
/// With all `δ_l ≠ 0` this is `(Π δ_l)(1 + Σ y_l⋆ δ_l⁻¹ x_l ρ)`. With a single
/// `δ_i = 0` it is `(Π_{l<i} δ_l) y_i⋆ (Π_{l>i} δ_l) x_i ρ`. Two or more zeros
/// give exactly zero.
pub fn dpr1_det<S: Scalar>(a: &Dpr1Matrix<S>, tol: f64) -> Result<Determinant<S>, Error> {
    let (d, x, y, rho) = (a.diag(), a.x(), a.y(), a.rho());
    let one = rho.one_like();
    let (raw, branch) = match scan_zeros(d, tol) {
        ZeroScan::None => {
            let mut s = one.clone();
            for ((dl, xl), yl) in d.iter().zip(x).zip(y) {
                s = s.add(&yl.conj().mul(&dl.inv()?).mul(xl).mul(rho));
            }
            (ordered_product(d, one).mul(&s), DetBranch::NonzeroDiagonal)
        }
        ZeroScan::One(i) => {
            let raw = ordered_product(&d[..i], one.clone())
                .mul(&y[i].conj())
                .mul(&ordered_product(&d[i + 1..], one))
                .mul(&x[i])
                .mul(rho);
            (raw, DetBranch::SingleZero { position: i + 1 })
        }
        ZeroScan::Many => (rho.zero_like(), DetBranch::MultipleZeros),
    };
    Ok(Determinant { raw, branch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    /// Laplace expansion; exact for small integer matrices.
    fn cofactor(m: &DenseMatrix<f64>) -> f64 {
        let n = m.rows();
        if n == 1 {
            return m[(0, 0)];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<f64>> = (1..n)
                    .map(|r| (0..n).filter(|&c| c != j).map(|c| m[(r, c)]).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * m[(0, j)] * cofactor(&DenseMatrix::from_rows(minor).unwrap())
            })
            .sum()
    }

    #[test]
    fn arrow_nonzero_diagonal() {
        let a = ArrowMatrix::new(vec![2.0, 3.0], vec![1.0, 1.0], vec![1.0, 1.0], 1.0, 3).unwrap();
        assert_eq!(cofactor(&a.to_dense()), 1.0);
        let det = arrow_det(&a, 0.0).unwrap();
        assert!((det.value() - 1.0).abs() < 1e-14);
        assert_eq!(det.branch(), DetBranch::NonzeroDiagonal);
    }

    #[test]
    fn arrow_single_zero() {
        let a = ArrowMatrix::new(vec![0.0, 3.0], vec![1.0, 2.0], vec![4.0, 5.0], 7.0, 3).unwrap();
        assert_eq!(cofactor(&a.to_dense()), -12.0);
        let det = arrow_det(&a, 0.0).unwrap();
        assert_eq!(*det.value(), -12.0);
        assert_eq!(det.branch(), DetBranch::SingleZero { position: 1 });
    }

    #[test]
    fn arrow_single_zero_every_tip() {
        for tip in 1..=4 {
            let a = ArrowMatrix::new(
                vec![2.0, 0.0, 5.0],
                vec![1.0, 3.0, -1.0],
                vec![4.0, -2.0, 6.0],
                7.0,
                tip,
            )
            .unwrap();
            let expected = cofactor(&a.to_dense());
            assert_eq!(*arrow_det(&a, 0.0).unwrap().value(), expected, "tip {tip}");
        }
    }

    #[test]
    fn arrow_identity_and_many_zeros() {
        let a = ArrowMatrix::new(vec![1.0; 3], vec![0.0; 3], vec![0.0; 3], 2.5, 2).unwrap();
        assert_eq!(*arrow_det(&a, 0.0).unwrap().value(), 2.5);
        let b = ArrowMatrix::new(vec![0.0, 0.0, 1.0], vec![1.0; 3], vec![1.0; 3], 1.0, 4).unwrap();
        let det = arrow_det(&b, 0.0).unwrap();
        assert_eq!(*det.value(), 0.0);
        assert_eq!(det.branch(), DetBranch::MultipleZeros);
        assert_eq!(cofactor(&b.to_dense()), 0.0);
    }

    #[test]
    fn tolerance_selects_branch() {
        let a = ArrowMatrix::new(vec![1e-20, 3.0], vec![1.0, 2.0], vec![4.0, 5.0], 7.0, 3).unwrap();
        assert_eq!(
            arrow_det(&a, 0.0).unwrap().branch(),
            DetBranch::NonzeroDiagonal
        );
        assert_eq!(
            arrow_det(&a, 1e-12).unwrap().branch(),
            DetBranch::SingleZero { position: 1 }
        );
    }

    #[test]
    fn dpr1_cases() {
        let a = Dpr1Matrix::new(vec![1.0, 2.0], vec![1.0, 1.0], vec![1.0, 1.0], 1.0).unwrap();
        assert_eq!(cofactor(&a.to_dense()), 5.0);
        assert_eq!(*dpr1_det(&a, 0.0).unwrap().value(), 5.0);

        let b = Dpr1Matrix::new(vec![2.0, 3.0, 4.0], vec![1.0; 3], vec![1.0; 3], 0.0).unwrap();
        assert_eq!(*dpr1_det(&b, 0.0).unwrap().value(), 24.0);

        let c = Dpr1Matrix::new(vec![0.0, 2.0], vec![3.0, 1.0], vec![4.0, 1.0], 5.0).unwrap();
        assert_eq!(cofactor(&c.to_dense()), 120.0);
        let det = dpr1_det(&c, 0.0).unwrap();
        assert_eq!(*det.value(), 120.0);
        assert_eq!(det.branch(), DetBranch::SingleZero { position: 1 });

        let z = Dpr1Matrix::new(vec![0.0, 0.0], vec![3.0, 1.0], vec![4.0, 1.0], 5.0).unwrap();
        assert_eq!(*dpr1_det(&z, 0.0).unwrap().value(), 0.0);
    }

    #[test]
    fn quaternion_study() {
        let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        let a =
            Dpr1Matrix::new(vec![q], vec![Quaternion::ZERO], vec![Quaternion::ZERO], q).unwrap();
        assert!((dpr1_det(&a, 0.0).unwrap().study() - 30f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn singular_diagonal_block_is_not_representable() {
        let sing = Block::from_diagonal(&[1.0, 0.0]);
        let id = Block::<f64>::identity(2);
        let a = ArrowMatrix::new(vec![sing], vec![id.clone()], vec![id.clone()], id, 2).unwrap();
        assert_eq!(arrow_det(&a, 0.0), Err(Error::NotRepresentable));
    }

    #[test]
    fn block_determinant_reduces() {
        let d1 = Block::from_rows(&[vec![2.0, 1.0], vec![0.0, 1.0]]).unwrap();
        let d2 = Block::from_rows(&[vec![1.0, 0.0], vec![3.0, 1.0]]).unwrap();
        let u = Block::from_rows(&[vec![0.5, 0.0], vec![1.0, 0.25]]).unwrap();
        let v = Block::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let alpha = Block::from_rows(&[vec![4.0, 1.0], vec![1.0, 5.0]]).unwrap();
        let a = ArrowMatrix::new(
            vec![d1, d2],
            vec![u.clone(), u],
            vec![v.clone(), v],
            alpha,
            2,
        )
        .unwrap();
        let flat = oracle::expand_block(&a.to_dense()).unwrap();
        let expected = oracle::dense_det(&flat).unwrap();
        let got = arrow_det(&a, 0.0).unwrap().reduce();
        assert!((got - expected).abs() < 1e-12 * expected.abs());
    }
}
