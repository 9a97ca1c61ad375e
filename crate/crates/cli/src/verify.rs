//! The `verify` subcommand: randomized oracle-equivalence checks.
//!
//! Every property draws its instances from one ChaCha stream seeded by the
//! caller, so a given configuration always prints the same summary.

use std::fmt::Write as _;

use arrowdpr_core::oracle::{
    dense_det, dense_det_quaternion_magnitude, dense_inv, dense_matvec, dense_mul, expand_block,
};
use arrowdpr_core::{
    BaseScalar, Block, Complex64, DenseMatrix, DetBranch, Determinant, Error, Quaternion, Scalar,
    StructuredMatrix,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::random::{self, Recipe, Sample, Spread};
use crate::sentinel::{self, AGREEMENT_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FieldSpec {
    Real,
    Complex,
    Quaternion,
    /// Real blocks, `k` cycling through 1..=4.
    Block,
    BlockComplex,
    BlockQuaternion,
}

impl FieldSpec {
    pub fn name(self) -> &'static str {
        match self {
            FieldSpec::Real => "real",
            FieldSpec::Complex => "complex",
            FieldSpec::Quaternion => "quaternion",
            FieldSpec::Block => "block",
            FieldSpec::BlockComplex => "block-complex",
            FieldSpec::BlockQuaternion => "block-quaternion",
        }
    }
}

pub const DEFAULT_SIZES: &[usize] = &[2, 3, 5, 8, 13, 21, 40];
pub const DEFAULT_FIELDS: &[FieldSpec] = &[
    FieldSpec::Real,
    FieldSpec::Complex,
    FieldSpec::Quaternion,
    FieldSpec::Block,
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub sizes: Vec<usize>,
    pub fields: Vec<FieldSpec>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            trials: 200,
            sizes: DEFAULT_SIZES.to_vec(),
            fields: DEFAULT_FIELDS.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub property: &'static str,
    pub field: &'static str,
    pub passed: usize,
    pub total: usize,
    /// Largest observed error relative to the property's tolerance.
    pub worst_ratio: f64,
}

impl Outcome {
    pub fn new(property: &'static str, field: &'static str) -> Self {
        Outcome {
            property,
            field,
            passed: 0,
            total: 0,
            worst_ratio: 0.0,
        }
    }

    /// Records one check of `err` against `tol`.
    pub fn record(&mut self, err: f64, tol: f64) {
        self.total += 1;
        let ratio = if tol > 0.0 { err / tol } else { err };
        if ratio <= 1.0 {
            self.passed += 1;
        }
        if ratio.is_nan() || ratio > self.worst_ratio {
            self.worst_ratio = ratio;
        }
    }

    pub fn fail(&mut self) {
        self.total += 1;
        self.worst_ratio = f64::INFINITY;
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub outcomes: Vec<Outcome>,
    pub warnings: Vec<String>,
}

impl Summary {
    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.ok()).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for o in &self.outcomes {
            let _ = writeln!(
                out,
                "{:<4} {:<24} {:<17} {:>5}/{:<5} worst/tol {:.3e}",
                if o.ok() { "PASS" } else { "FAIL" },
                o.property,
                o.field,
                o.passed,
                o.total,
                o.worst_ratio
            );
        }
        let _ = writeln!(
            out,
            "{} properties, {} failed",
            self.outcomes.len(),
            self.failures()
        );
        out
    }
}

/// Scalar types the verifier knows how to check.
pub trait Checkable: Sample {
    type Base: Scalar;

    fn template(trial: usize) -> Self;
    /// Matvec tolerance (componentwise relative).
    fn matvec_tol(&self) -> f64;
    /// Largest order used for determinant checks.
    const DET_MAX_N: usize;
    fn flatten(m: &DenseMatrix<Self>) -> DenseMatrix<Self::Base>;
    /// Relative error of a fast determinant against the dense oracle.
    fn det_rel_error(det: &Determinant<Self>, dense: &DenseMatrix<Self>) -> Result<f64, Error>;
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

impl Checkable for f64 {
    type Base = f64;
    const DET_MAX_N: usize = 25;
    fn template(_: usize) -> Self {
        0.0
    }
    fn matvec_tol(&self) -> f64 {
        1e-11
    }
    fn flatten(m: &DenseMatrix<Self>) -> DenseMatrix<f64> {
        m.clone()
    }
    fn det_rel_error(det: &Determinant<Self>, dense: &DenseMatrix<Self>) -> Result<f64, Error> {
        Ok(rel(*det.value(), dense_det(dense)?))
    }
}

impl Checkable for Complex64 {
    type Base = Complex64;
    const DET_MAX_N: usize = 25;
    fn template(_: usize) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn matvec_tol(&self) -> f64 {
        1e-11
    }
    fn flatten(m: &DenseMatrix<Self>) -> DenseMatrix<Complex64> {
        m.clone()
    }
    fn det_rel_error(det: &Determinant<Self>, dense: &DenseMatrix<Self>) -> Result<f64, Error> {
        let want = dense_det(dense)?;
        Ok(det.value().sub(&want).magnitude() / want.magnitude().max(f64::MIN_POSITIVE))
    }
}

impl Checkable for Quaternion {
    type Base = Quaternion;
    const DET_MAX_N: usize = 12;
    fn template(_: usize) -> Self {
        Quaternion::ZERO
    }
    fn matvec_tol(&self) -> f64 {
        1e-10
    }
    fn flatten(m: &DenseMatrix<Self>) -> DenseMatrix<Quaternion> {
        m.clone()
    }
    fn det_rel_error(det: &Determinant<Self>, dense: &DenseMatrix<Self>) -> Result<f64, Error> {
        Ok(rel(det.study(), dense_det_quaternion_magnitude(dense)?))
    }
}

fn block_template<B: BaseScalar>(trial: usize) -> Block<B> {
    Block::zeros(1 + trial % 4)
}

impl Checkable for Block<f64> {
    type Base = f64;
    const DET_MAX_N: usize = 12;
    fn template(trial: usize) -> Self {
        block_template(trial)
    }
    fn matvec_tol(&self) -> f64 {
        self.k() as f64 * 1e-10
    }
    fn flatten(m: &DenseMatrix<Self>) -> DenseMatrix<f64> {
        expand_block(m).expect("uniform blocks")
    }
    fn det_rel_error(det: &Determinant<Self>, dense: &DenseMatrix<Self>) -> Result<f64, Error> {
        Ok(rel(det.reduce(), dense_det(&expand_block(dense)?)?))
    }
}

impl Checkable for Block<Complex64> {
    type Base = Complex64;
    const DET_MAX_N: usize = 12;
    fn template(trial: usize) -> Self {
        block_template(trial)
    }
    fn matvec_tol(&self) -> f64 {
        self.k() as f64 * 1e-10
    }
    fn flatten(m: &DenseMatrix<Self>) -> DenseMatrix<Complex64> {
        expand_block(m).expect("uniform blocks")
    }
    fn det_rel_error(det: &Determinant<Self>, dense: &DenseMatrix<Self>) -> Result<f64, Error> {
        let want = dense_det(&expand_block(dense)?)?;
        Ok(det.reduce().sub(&want).magnitude() / want.magnitude().max(f64::MIN_POSITIVE))
    }
}

impl Checkable for Block<Quaternion> {
    type Base = Quaternion;
    const DET_MAX_N: usize = 12;
    fn template(trial: usize) -> Self {
        block_template(trial)
    }
    fn matvec_tol(&self) -> f64 {
        self.k() as f64 * 1e-10
    }
    fn flatten(m: &DenseMatrix<Self>) -> DenseMatrix<Quaternion> {
        expand_block(m).expect("uniform blocks")
    }
    fn det_rel_error(det: &Determinant<Self>, dense: &DenseMatrix<Self>) -> Result<f64, Error> {
        Ok(rel(
            det.study()?,
            dense_det_quaternion_magnitude(&expand_block(dense)?)?,
        ))
    }
}

/// Componentwise relative matvec error, each row scaled by `Σ_j |A_ij||z_j|`.
pub fn matvec_error<S: Scalar>(dense: &DenseMatrix<S>, z: &[S], fast: &[S]) -> Result<f64, Error> {
    let reference = dense_matvec(dense, z)?;
    let z_mag: Vec<f64> = z.iter().map(Scalar::magnitude).collect();
    Ok((0..dense.rows())
        .map(|i| {
            let scale: f64 = dense
                .row(i)
                .iter()
                .zip(&z_mag)
                .filter(|(a, _)| !a.is_exact_zero())
                .map(|(a, b)| a.magnitude() * b)
                .sum();
            let err = fast[i].sub(&reference[i]).magnitude();
            if scale > 0.0 {
                err / scale
            } else {
                err
            }
        })
        .fold(0.0, f64::max))
}

/// `‖A·B − I‖_max` together with `κ̃ = ‖A‖_max ‖B‖_max`.
pub fn inverse_residual<S: Scalar>(
    a: &DenseMatrix<S>,
    b: &DenseMatrix<S>,
) -> Result<(f64, f64), Error> {
    let id = DenseMatrix::identity_like(a.rows(), &a[(0, 0)]);
    let res = dense_mul(a, b)?.max_diff(&id)?;
    Ok((res, a.max_norm() * b.max_norm()))
}

/// Which structured family to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Arrow,
    Dpr1,
}

impl Family {
    pub const BOTH: [Family; 2] = [Family::Arrow, Family::Dpr1];

    fn label(self, arrow: &'static str, dpr1: &'static str) -> &'static str {
        match self {
            Family::Arrow => arrow,
            Family::Dpr1 => dpr1,
        }
    }

    /// Diagonal length at order `n`.
    fn diag_len(self, n: usize) -> usize {
        match self {
            Family::Arrow => n - 1,
            Family::Dpr1 => n,
        }
    }

    pub fn random<S: Sample, R: Rng + ?Sized>(
        self,
        rng: &mut R,
        t: &S,
        n: usize,
        recipe: Recipe,
    ) -> StructuredMatrix<S> {
        match self {
            Family::Arrow => random::arrow(rng, t, n, recipe).into(),
            Family::Dpr1 => random::dpr1(rng, t, n, recipe).into(),
        }
    }
}

/// How a property draws its instances: trial `i` has order `sizes[i % len]`
/// and element shape `template(i)`.
pub struct Plan<'a, S> {
    pub field: &'static str,
    pub trials: usize,
    pub sizes: &'a [usize],
    pub template: &'a dyn Fn(usize) -> S,
}

impl<S> Plan<'_, S> {
    fn size(&self, trial: usize) -> usize {
        self.sizes[trial % self.sizes.len()]
    }
}

/// Fast matvec against the dense oracle, tolerance [`Checkable::matvec_tol`].
pub fn check_matvec<S: Checkable, R: Rng + ?Sized>(
    plan: &Plan<S>,
    family: Family,
    rng: &mut R,
) -> Outcome {
    let mut o = Outcome::new(family.label("arrow_matvec", "dpr1_matvec"), plan.field);
    for trial in 0..plan.trials {
        let t = (plan.template)(trial);
        let n = plan.size(trial);
        let a = family.random(rng, &t, n, Recipe::DEFAULT);
        let z = random::vector(rng, &t, n);
        match a
            .matvec(&z)
            .and_then(|w| matvec_error(&a.to_dense(), &z, &w))
        {
            Ok(err) => o.record(err, t.matvec_tol()),
            Err(_) => o.fail(),
        }
    }
    o
}

/// Determinants against the dense oracle with relative tolerance `tol`.
/// Entries are drawn with magnitude in `[1/2, 2]`; odd trials put an exact
/// zero on the diagonal, and the reported branch is checked too.
pub fn check_det<S: Checkable, R: Rng + ?Sized>(
    plan: &Plan<S>,
    family: Family,
    tol: f64,
    rng: &mut R,
) -> Outcome {
    let mut o = Outcome::new(family.label("arrow_det", "dpr1_det"), plan.field);
    let bounded = Recipe {
        diag: Spread::Bounded,
        rest: Spread::Bounded,
        zero_at: None,
    };
    for trial in 0..plan.trials {
        let t = (plan.template)(trial);
        let n = plan.size(trial).min(S::DET_MAX_N).max(2);
        let zero = (trial % 2 == 1).then(|| rng.gen_range(0..family.diag_len(n)));
        let a = family.random(rng, &t, n, bounded.with_zero(zero));
        let det = match a.det(0.0) {
            Ok(d) => d,
            Err(_) => {
                o.fail();
                continue;
            }
        };
        let branch_ok = match (det.branch(), zero) {
            (DetBranch::NonzeroDiagonal, None) => true,
            (DetBranch::SingleZero { position }, Some(z)) => position == zero_position(&a, z),
            _ => false,
        };
        match S::det_rel_error(&det, &a.to_dense()) {
            Ok(err) if branch_ok => o.record(err, tol),
            _ => o.fail(),
        }
    }
    o
}

/// Dense (1-based) position of diagonal entry `z`.
fn zero_position<S: Scalar>(a: &StructuredMatrix<S>, z: usize) -> usize {
    match a {
        StructuredMatrix::Arrow(arrow) => arrow.shaft_position(z) + 1,
        StructuredMatrix::Dpr1(_) => z + 1,
    }
}

/// Inverse checks, in order: residual `‖A·A⁻¹ − I‖ ≤ 1e-9·n·κ̃`, result tag
/// and tip, and `(A⁻¹)⁻¹ = A` on instances with `κ̃ ≤ 1e3`. Odd trials put
/// an exact zero on the diagonal.
pub fn check_inverse<S: Checkable, R: Rng + ?Sized>(
    plan: &Plan<S>,
    family: Family,
    rng: &mut R,
) -> [Outcome; 3] {
    let mut inv = Outcome::new(family.label("arrow_inv", "dpr1_inv"), plan.field);
    let mut shape = Outcome::new(
        family.label("arrow_inv_structure", "dpr1_inv_structure"),
        plan.field,
    );
    let mut double = Outcome::new(
        family.label("arrow_double_inv", "dpr1_double_inv"),
        plan.field,
    );
    for trial in 0..plan.trials {
        let t = (plan.template)(trial);
        let n = plan.size(trial).max(2);
        let zero = (trial % 2 == 1).then(|| rng.gen_range(0..family.diag_len(n)));
        let a = family.random(rng, &t, n, Recipe::DEFAULT.with_zero(zero));
        let flat = S::flatten(&a.to_dense());
        let result = match a.inverse(0.0) {
            Ok(r) => r,
            Err(Error::Singular) if dense_inv(&flat).is_err() => {
                inv.record(0.0, 1.0);
                continue;
            }
            Err(_) => {
                inv.fail();
                shape.fail();
                continue;
            }
        };

        let shape_ok = match (&result, zero) {
            (StructuredMatrix::Dpr1(_), None) => true,
            (StructuredMatrix::Arrow(b), Some(z)) => b.tip() == zero_position(&a, z),
            _ => false,
        };
        shape.record(if shape_ok { 0.0 } else { 2.0 }, 1.0);

        let inv_flat = S::flatten(&result.to_dense());
        let kappa = match inverse_residual(&flat, &inv_flat) {
            Ok((res, kappa)) => {
                inv.record(res, 1e-9 * n as f64 * kappa);
                kappa
            }
            Err(_) => {
                inv.fail();
                f64::INFINITY
            }
        };
        if kappa <= 1e3 {
            match result.inverse(0.0) {
                Ok(back) => {
                    let err = S::flatten(&back.to_dense())
                        .max_diff(&flat)
                        .unwrap_or(f64::INFINITY);
                    double.record(err, 1e-8 * flat.max_norm());
                }
                Err(_) => double.fail(),
            }
        }
    }
    [inv, shape, double]
}

fn check_field<S: Checkable>(
    field: FieldSpec,
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<Outcome> {
    let plan = Plan {
        field: field.name(),
        trials: cfg.trials,
        sizes: &cfg.sizes,
        template: &S::template,
    };
    let mut outcomes = Vec::new();
    for family in Family::BOTH {
        outcomes.push(check_matvec(&plan, family, rng));
    }
    for family in Family::BOTH {
        outcomes.push(check_det(&plan, family, 1e-8, rng));
    }
    for family in Family::BOTH {
        outcomes.extend(check_inverse(&plan, family, rng));
    }
    outcomes
}

pub fn check_sentinels() -> Outcome {
    let mut o = Outcome::new("ordering_sentinels", "quaternion");
    for s in sentinel::sentinels() {
        match s.case.deviation() {
            Ok(dev) => o.record(dev, AGREEMENT_TOL),
            Err(_) => o.fail(),
        }
    }
    o
}

pub fn run_verify(cfg: &VerifyConfig) -> Summary {
    let mut summary = Summary::default();
    if cfg.trials == 0 {
        summary
            .warnings
            .push("trials = 0: randomized properties are vacuously satisfied".into());
    }
    let mut sizes: Vec<usize> = cfg.sizes.iter().copied().filter(|&n| n >= 1).collect();
    if sizes.is_empty() {
        summary
            .warnings
            .push("no usable sizes; using defaults".into());
        sizes = DEFAULT_SIZES.to_vec();
    }
    let cfg = VerifyConfig {
        sizes,
        ..cfg.clone()
    };
    for (idx, &field) in cfg.fields.iter().enumerate() {
        // Independent stream per field so adding a field leaves the others unchanged.
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(idx as u64 + 1);
        let outcomes = match field {
            FieldSpec::Real => check_field::<f64>(field, &cfg, &mut rng),
            FieldSpec::Complex => check_field::<Complex64>(field, &cfg, &mut rng),
            FieldSpec::Quaternion => check_field::<Quaternion>(field, &cfg, &mut rng),
            FieldSpec::Block => check_field::<Block<f64>>(field, &cfg, &mut rng),
            FieldSpec::BlockComplex => check_field::<Block<Complex64>>(field, &cfg, &mut rng),
            FieldSpec::BlockQuaternion => check_field::<Block<Quaternion>>(field, &cfg, &mut rng),
        };
        summary.outcomes.extend(outcomes);
    }
    if cfg.fields.contains(&FieldSpec::Quaternion) {
        summary.outcomes.push(check_sentinels());
    }
    summary
}
