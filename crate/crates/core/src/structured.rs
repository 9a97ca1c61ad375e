//! Arrowhead and DPR1 containers.
//!
//! Tip positions are 1-based in the public API, as in the usual
//! mathematical notation. [`ArrowMatrix::new`] converts to a 0-based index
//! and every other piece of code goes through [`ArrowMatrix::shaft_position`]
//! or [`ArrowMatrix::tip_index`].

use alloc::vec::Vec;

use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::scalar::Scalar;

/// `Arrow(D, u, v, α)`: diagonal `D` of length `n−1`, a column `u` and a row
/// `v⋆` crossing at the tip `α`, symmetrically permuted so that the tip sits
/// at position `(tip, tip)`.
///
/// `v` is stored unconjugated; the matrix row is `v⋆`.
#[derive(Clone, Debug, PartialEq)]
pub struct ArrowMatrix<S> {
    diag: Vec<S>,
    u: Vec<S>,
    v: Vec<S>,
    alpha: S,
    tip: usize,
}

/// `DPR1(Δ, x, y, ρ) = Δ + x ρ y⋆`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dpr1Matrix<S> {
    diag: Vec<S>,
    x: Vec<S>,
    y: Vec<S>,
    rho: S,
}

/// Either structured form. Inverses come back as this type because the
/// inverse of an arrowhead matrix is DPR1 and vice versa, except when a
/// single diagonal entry is zero.
#[derive(Clone, Debug, PartialEq)]
pub enum StructuredMatrix<S> {
    Arrow(ArrowMatrix<S>),
    Dpr1(Dpr1Matrix<S>),
}

pub type StructuredInverse<S> = StructuredMatrix<S>;

fn check_len<S>(what: &'static str, v: &[S], expected: usize) -> Result<(), Error> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::Dimension {
            what,
            expected,
            found: v.len(),
        })
    }
}

fn check_shapes<S: Scalar>(what: &'static str, v: &[S], reference: &S) -> Result<(), Error> {
    if v.iter().all(|e| e.same_shape(reference)) {
        Ok(())
    } else {
        Err(Error::ShapeMismatch { what })
    }
}

impl<S: Scalar> ArrowMatrix<S> {
    /// `tip` is 1-based and must lie in `1..=diag.len() + 1`.
    pub fn new(diag: Vec<S>, u: Vec<S>, v: Vec<S>, alpha: S, tip: usize) -> Result<Self, Error> {
        let n = diag.len() + 1;
        if tip == 0 || tip > n {
            return Err(Error::TipOutOfRange { tip, n });
        }
        let a = ArrowMatrix {
            diag,
            u,
            v,
            alpha,
            tip: tip - 1,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let m = self.diag.len();
        check_len("u", &self.u, m)?;
        check_len("v", &self.v, m)?;
        if self.tip > m {
            return Err(Error::TipOutOfRange {
                tip: self.tip + 1,
                n: m + 1,
            });
        }
        check_shapes("diag", &self.diag, &self.alpha)?;
        check_shapes("u", &self.u, &self.alpha)?;
        check_shapes("v", &self.v, &self.alpha)?;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.diag.len() + 1
    }

    /// 1-based tip position.
    pub fn tip(&self) -> usize {
        self.tip + 1
    }

    /// 0-based tip position.
    pub fn tip_index(&self) -> usize {
        self.tip
    }

    /// 0-based dense row/column of shaft entry `l` (also 0-based).
    pub fn shaft_position(&self, l: usize) -> usize {
        if l < self.tip {
            l
        } else {
            l + 1
        }
    }

    pub fn diag(&self) -> &[S] {
        &self.diag
    }

    pub fn u(&self) -> &[S] {
        &self.u
    }

    pub fn v(&self) -> &[S] {
        &self.v
    }

    pub fn alpha(&self) -> &S {
        &self.alpha
    }

    pub fn to_dense(&self) -> DenseMatrix<S> {
        let n = self.n();
        let t = self.tip;
        let mut m = DenseMatrix::zeros_like(n, n, &self.alpha);
        for (l, ((d, u), v)) in self.diag.iter().zip(&self.u).zip(&self.v).enumerate() {
            let p = self.shaft_position(l);
            m[(p, p)] = d.clone();
            m[(p, t)] = u.clone();
            m[(t, p)] = v.conj();
        }
        m[(t, t)] = self.alpha.clone();
        m
    }
}

impl<S: Scalar> Dpr1Matrix<S> {
    pub fn new(diag: Vec<S>, x: Vec<S>, y: Vec<S>, rho: S) -> Result<Self, Error> {
        let a = Dpr1Matrix { diag, x, y, rho };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.diag.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        check_len("x", &self.x, n)?;
        check_len("y", &self.y, n)?;
        check_shapes("diag", &self.diag, &self.rho)?;
        check_shapes("x", &self.x, &self.rho)?;
        check_shapes("y", &self.y, &self.rho)?;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[S] {
        &self.diag
    }

    pub fn x(&self) -> &[S] {
        &self.x
    }

    pub fn y(&self) -> &[S] {
        &self.y
    }

    pub fn rho(&self) -> &S {
        &self.rho
    }

    /// Entry `(i, j)` is `δ_i [i = j] + x_i · ρ · conj(y_j)`.
    pub fn to_dense(&self) -> DenseMatrix<S> {
        let n = self.n();
        let mut m = DenseMatrix::zeros_like(n, n, &self.rho);
        let y_conj: Vec<S> = self.y.iter().map(Scalar::conj).collect();
        for i in 0..n {
            let xr = self.x[i].mul(&self.rho);
            for (j, yc) in y_conj.iter().enumerate() {
                let r1 = xr.mul(yc);
                m[(i, j)] = if i == j { self.diag[i].add(&r1) } else { r1 };
            }
        }
        m
    }
}

impl<S: Scalar> StructuredMatrix<S> {
    pub fn n(&self) -> usize {
        match self {
            StructuredMatrix::Arrow(a) => a.n(),
            StructuredMatrix::Dpr1(a) => a.n(),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix<S> {
        match self {
            StructuredMatrix::Arrow(a) => a.to_dense(),
            StructuredMatrix::Dpr1(a) => a.to_dense(),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self {
            StructuredMatrix::Arrow(a) => a.validate(),
            StructuredMatrix::Dpr1(a) => a.validate(),
        }
    }

    pub fn as_arrow(&self) -> Option<&ArrowMatrix<S>> {
        match self {
            StructuredMatrix::Arrow(a) => Some(a),
            StructuredMatrix::Dpr1(_) => None,
        }
    }

    pub fn as_dpr1(&self) -> Option<&Dpr1Matrix<S>> {
        match self {
            StructuredMatrix::Dpr1(a) => Some(a),
            StructuredMatrix::Arrow(_) => None,
        }
    }
}

impl<S> From<ArrowMatrix<S>> for StructuredMatrix<S> {
    fn from(a: ArrowMatrix<S>) -> Self {
        StructuredMatrix::Arrow(a)
    }
}

impl<S> From<Dpr1Matrix<S>> for StructuredMatrix<S> {
    fn from(a: Dpr1Matrix<S>) -> Self {
        StructuredMatrix::Dpr1(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::Block;
    use crate::quaternion::Quaternion;
    use alloc::vec;

    fn dense(rows: &[&[f64]]) -> DenseMatrix<f64> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn arrow_layout_tip_last() {
        let a = ArrowMatrix::new(vec![2.0, 3.0], vec![1.0, 1.0], vec![1.0, 1.0], 1.0, 3).unwrap();
        assert_eq!(
            a.to_dense(),
            dense(&[&[2.0, 0.0, 1.0], &[0.0, 3.0, 1.0], &[1.0, 1.0, 1.0]])
        );
    }

    #[test]
    fn arrow_layout_tip_first() {
        let a = ArrowMatrix::new(vec![2.0, 3.0], vec![1.0, 0.0], vec![0.0, 1.0], 5.0, 1).unwrap();
        let expected = dense(&[&[5.0, 0.0, 1.0], &[1.0, 2.0, 0.0], &[0.0, 0.0, 3.0]]);
        assert_eq!(a.to_dense(), expected);

        // Same data with the tip last, conjugated by the permutation p = (3, 1, 2).
        let last =
            ArrowMatrix::new(vec![2.0, 3.0], vec![1.0, 0.0], vec![0.0, 1.0], 5.0, 3).unwrap();
        let mut p = DenseMatrix::zeros_like(3, 3, &0.0);
        for (i, &pi) in [2usize, 0, 1].iter().enumerate() {
            p[(i, pi)] = 1.0;
        }
        let pm = crate::oracle::dense_mul(&p, &last.to_dense()).unwrap();
        let mut pt = DenseMatrix::zeros_like(3, 3, &0.0);
        for r in 0..3 {
            for c in 0..3 {
                pt[(r, c)] = p[(c, r)];
            }
        }
        assert_eq!(crate::oracle::dense_mul(&pm, &pt).unwrap(), expected);
    }

    #[test]
    fn arrow_row_is_conjugated() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        let a = ArrowMatrix::new(vec![i, i], vec![i, i], vec![j, k], Quaternion::ONE, 3).unwrap();
        let m = a.to_dense();
        assert_eq!(m[(2, 0)], -j);
        assert_eq!(m[(2, 1)], -k);
        assert_eq!(m[(0, 2)], i);
    }

    #[test]
    fn tip_permutation_round_trip() {
        let d: Vec<f64> = vec![1.0, 2.0, 3.0, 4.0];
        let u = vec![5.0, 6.0, 7.0, 8.0];
        let v = vec![-1.0, -2.0, -3.0, -4.0];
        let last = ArrowMatrix::new(d.clone(), u.clone(), v.clone(), 9.0, 5)
            .unwrap()
            .to_dense();
        for tip in 1..=5 {
            let a = ArrowMatrix::new(d.clone(), u.clone(), v.clone(), 9.0, tip).unwrap();
            let mut perm: Vec<usize> = (0..4).map(|l| a.shaft_position(l)).collect();
            perm.push(a.tip_index());
            assert_eq!(a.to_dense().permute_symmetric(&perm).unwrap(), last);
        }
    }

    #[test]
    fn dpr1_entry_order() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        let a = Dpr1Matrix::new(vec![Quaternion::ONE; 2], vec![i, j], vec![j, k], k).unwrap();
        let m = a.to_dense();
        // x_0 ρ conj(y_1) = i k (−k) = i
        assert_eq!(m[(0, 1)], i);
        // δ_1 + x_1 ρ conj(y_1) = 1 + j k (−k) = 1 + j
        assert_eq!(m[(1, 1)], Quaternion::new(1.0, 0.0, 1.0, 0.0));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            ArrowMatrix::new(vec![1.0, 2.0], vec![1.0], vec![1.0, 1.0], 1.0, 3),
            Err(Error::Dimension {
                what: "u",
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            ArrowMatrix::new(vec![1.0], vec![1.0], vec![1.0], 1.0, 0),
            Err(Error::TipOutOfRange { tip: 0, n: 2 })
        );
        assert_eq!(
            ArrowMatrix::new(vec![1.0], vec![1.0], vec![1.0], 1.0, 3),
            Err(Error::TipOutOfRange { tip: 3, n: 2 })
        );
        assert!(Dpr1Matrix::new(vec![1.0, 2.0], vec![1.0, 1.0], vec![1.0, 1.0], 1.0).is_ok());
        assert_eq!(
            Dpr1Matrix::<f64>::new(vec![], vec![], vec![], 1.0),
            Err(Error::Empty)
        );
        let b2 = Block::<f64>::identity(2);
        let b3 = Block::<f64>::identity(3);
        assert_eq!(
            Dpr1Matrix::new(vec![b2.clone()], vec![b3], vec![b2.clone()], b2),
            Err(Error::ShapeMismatch { what: "x" })
        );
    }
}
