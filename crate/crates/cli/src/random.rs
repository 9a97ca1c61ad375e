//! Random scalars and structured matrices for verification and benchmarks.

use arrowdpr_core::{ArrowMatrix, BaseScalar, Block, Complex64, Dpr1Matrix, Quaternion, Scalar};
use rand::Rng;

/// Distribution of a random entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spread {
    /// Every real component uniform in `[-1, 1]`.
    Unit,
    /// Magnitude uniform in `[1/2, 2]`: positive reals, random phase or
    /// direction otherwise. Blocks are `s·I` plus a small perturbation.
    Bounded,
}

pub trait Sample: Scalar {
    /// A fresh element shaped like `template`.
    fn sample<R: Rng + ?Sized>(rng: &mut R, template: &Self, spread: Spread) -> Self;
}

fn bounded_magnitude<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.gen_range(0.5..=2.0)
}

impl Sample for f64 {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _: &Self, spread: Spread) -> Self {
        match spread {
            Spread::Unit => rng.gen_range(-1.0..=1.0),
            Spread::Bounded => bounded_magnitude(rng),
        }
    }
}

impl Sample for Complex64 {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _: &Self, spread: Spread) -> Self {
        match spread {
            Spread::Unit => Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)),
            Spread::Bounded => {
                let r = bounded_magnitude(rng);
                let phase = rng.gen_range(0.0..std::f64::consts::TAU);
                Complex64::new(r * phase.cos(), r * phase.sin())
            }
        }
    }
}

impl Sample for Quaternion {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _: &Self, spread: Spread) -> Self {
        let mut unit = || rng.gen_range(-1.0..=1.0);
        let q = Quaternion::new(unit(), unit(), unit(), unit());
        match spread {
            Spread::Unit => q,
            Spread::Bounded => {
                let norm = q.norm();
                if norm < 1e-3 {
                    return Quaternion::from_real(bounded_magnitude(rng));
                }
                q.scale(bounded_magnitude(rng) / norm)
            }
        }
    }
}

impl<B: BaseScalar + Sample> Sample for Block<B> {
    fn sample<R: Rng + ?Sized>(rng: &mut R, template: &Self, spread: Spread) -> Self {
        let k = template.k();
        let base = B::zero();
        let mut entries: Vec<B> = (0..k * k)
            .map(|_| B::sample(rng, &base, Spread::Unit))
            .collect();
        if spread == Spread::Bounded {
            let s = B::sample(rng, &base, Spread::Bounded);
            let damp = B::from_real(0.25);
            for (idx, e) in entries.iter_mut().enumerate() {
                *e = damp.mul(e);
                if idx % (k + 1) == 0 {
                    *e = e.add(&s);
                }
            }
        }
        Block::new(k, entries).expect("k×k entries")
    }
}

fn sample_vec<S: Sample, R: Rng + ?Sized>(
    rng: &mut R,
    t: &S,
    len: usize,
    spread: Spread,
) -> Vec<S> {
    (0..len).map(|_| S::sample(rng, t, spread)).collect()
}

/// How to fill a random structured matrix.
#[derive(Clone, Copy, Debug)]
pub struct Recipe {
    /// Spread of the diagonal.
    pub diag: Spread,
    /// Spread of every other entry.
    pub rest: Spread,
    /// Put an exact zero at this diagonal index.
    pub zero_at: Option<usize>,
}

impl Recipe {
    pub const DEFAULT: Recipe = Recipe {
        diag: Spread::Bounded,
        rest: Spread::Unit,
        zero_at: None,
    };

    pub fn with_zero(self, zero_at: Option<usize>) -> Recipe {
        Recipe { zero_at, ..self }
    }
}

/// Random arrowhead matrix of order `n ≥ 1` with a uniformly chosen tip.
pub fn arrow<S: Sample, R: Rng + ?Sized>(
    rng: &mut R,
    t: &S,
    n: usize,
    recipe: Recipe,
) -> ArrowMatrix<S> {
    let m = n - 1;
    let mut diag = sample_vec(rng, t, m, recipe.diag);
    if let Some(z) = recipe.zero_at {
        diag[z] = t.zero_like();
    }
    let u = sample_vec(rng, t, m, recipe.rest);
    let v = sample_vec(rng, t, m, recipe.rest);
    let alpha = S::sample(rng, t, recipe.rest);
    let tip = rng.gen_range(1..=n);
    ArrowMatrix::new(diag, u, v, alpha, tip).expect("consistent lengths")
}

/// Random DPR1 matrix of order `n ≥ 1`.
pub fn dpr1<S: Sample, R: Rng + ?Sized>(
    rng: &mut R,
    t: &S,
    n: usize,
    recipe: Recipe,
) -> Dpr1Matrix<S> {
    let mut diag = sample_vec(rng, t, n, recipe.diag);
    if let Some(z) = recipe.zero_at {
        diag[z] = t.zero_like();
    }
    let x = sample_vec(rng, t, n, recipe.rest);
    let y = sample_vec(rng, t, n, recipe.rest);
    let rho = S::sample(rng, t, recipe.rest);
    Dpr1Matrix::new(diag, x, y, rho).expect("consistent lengths")
}

pub fn vector<S: Sample, R: Rng + ?Sized>(rng: &mut R, t: &S, n: usize) -> Vec<S> {
    sample_vec(rng, t, n, Spread::Unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bounded_magnitudes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let r = f64::sample(&mut rng, &0.0, Spread::Bounded);
            assert!((0.5..=2.0).contains(&r));
            let c = Complex64::sample(&mut rng, &Complex64::new(0.0, 0.0), Spread::Bounded);
            assert!((0.5 - 1e-12..=2.0 + 1e-12).contains(&c.magnitude()));
            let q = Quaternion::sample(&mut rng, &Quaternion::ZERO, Spread::Bounded);
            assert!((0.5 - 1e-12..=2.0 + 1e-12).contains(&q.norm()));
        }
    }

    #[test]
    fn zero_placement_and_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let t = Block::<f64>::identity(3);
        let a = arrow(&mut rng, &t, 5, Recipe::DEFAULT.with_zero(Some(2)));
        assert!(a.diag()[2].is_exact_zero());
        assert!(a.u().iter().all(|b| b.k() == 3));
        let d = dpr1(&mut rng, &0.0, 4, Recipe::DEFAULT);
        assert_eq!(d.n(), 4);
    }
}
