//! The `bench` subcommand: wall time and operation counts versus order.

use std::hint::black_box;
use std::io;
use std::path::Path;
use std::time::{Duration, Instant};

use arrowdpr_core::{
    ArrowMatrix, Block, Complex64, Dpr1Matrix, Quaternion, Scalar, StructuredMatrix,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::counting::{count_ops, Counting};
use crate::error::CliError;
use crate::random::{self, Recipe, Sample};
use crate::verify::FieldSpec;

pub const CSV_HEADER: [&str; 5] = ["operation", "field", "n", "ns_median", "scalar_ops"];
pub const OPERATIONS: [&str; 6] = [
    "arrow_matvec",
    "arrow_det",
    "arrow_inv",
    "dpr1_matvec",
    "dpr1_det",
    "dpr1_inv",
];

/// Timed repetitions per measurement, after one discarded warm-up.
const RUNS: usize = 5;
/// Target duration of one timed repetition.
const BATCH_TARGET: Duration = Duration::from_millis(2);
/// Block order used when benchmarking block fields.
const BENCH_BLOCK_K: usize = 2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub operation: String,
    pub field: String,
    pub n: usize,
    pub ns_median: f64,
    pub scalar_ops: u64,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub fields: Vec<FieldSpec>,
    pub seed: u64,
    /// Restrict to these operation names; empty means all.
    pub operations: Vec<String>,
}

fn wrap_vec<S: Clone>(v: &[S]) -> Vec<Counting<S>> {
    v.iter().cloned().map(Counting).collect()
}

/// The same matrix over the counting scalar.
pub fn counting_matrix<S: Scalar>(m: &StructuredMatrix<S>) -> StructuredMatrix<Counting<S>> {
    match m {
        StructuredMatrix::Arrow(a) => ArrowMatrix::new(
            wrap_vec(a.diag()),
            wrap_vec(a.u()),
            wrap_vec(a.v()),
            Counting(a.alpha().clone()),
            a.tip(),
        )
        .expect("same shape")
        .into(),
        StructuredMatrix::Dpr1(d) => Dpr1Matrix::new(
            wrap_vec(d.diag()),
            wrap_vec(d.x()),
            wrap_vec(d.y()),
            Counting(d.rho().clone()),
        )
        .expect("same shape")
        .into(),
    }
}

/// Runs `operation` once; the result is discarded through `black_box`.
fn run_op<S: Scalar>(operation: &str, m: &StructuredMatrix<S>, z: &[S]) {
    match operation {
        "arrow_matvec" | "dpr1_matvec" => {
            black_box(m.matvec(z).ok());
        }
        "arrow_det" | "dpr1_det" => {
            black_box(m.det(0.0).ok());
        }
        _ => {
            black_box(m.inverse(0.0).ok());
        }
    }
}

/// Median wall time of one call, in nanoseconds.
pub fn time_median(mut f: impl FnMut()) -> f64 {
    // Warm-up, also used to size the batch.
    let start = Instant::now();
    f();
    let once = start.elapsed().max(Duration::from_nanos(1));
    let batch = (BATCH_TARGET.as_nanos() / once.as_nanos()).clamp(1, 1_000_000) as usize;
    let mut samples: Vec<f64> = (0..RUNS)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                f();
            }
            start.elapsed().as_nanos() as f64 / batch as f64
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    samples[RUNS / 2]
}

/// Scalar operations performed by one call of `operation` on `m`.
pub fn scalar_ops<S: Scalar>(operation: &str, m: &StructuredMatrix<S>, z: &[S]) -> u64 {
    let cm = counting_matrix(m);
    let cz = wrap_vec(z);
    count_ops(|| run_op(operation, &cm, &cz)).1
}

fn bench_field<S: Sample>(
    cfg: &BenchConfig,
    field: FieldSpec,
    t: &S,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<BenchRecord>,
) {
    for &operation in OPERATIONS.iter() {
        if !cfg.operations.is_empty() && !cfg.operations.iter().any(|o| o == operation) {
            continue;
        }
        for &n in &cfg.sizes {
            let m: StructuredMatrix<S> = if operation.starts_with("arrow") {
                random::arrow(rng, t, n, Recipe::DEFAULT).into()
            } else {
                random::dpr1(rng, t, n, Recipe::DEFAULT).into()
            };
            let z = random::vector(rng, t, n);
            let ns_median = time_median(|| run_op(operation, black_box(&m), black_box(&z)));
            out.push(BenchRecord {
                operation: operation.to_string(),
                field: field.name().to_string(),
                n,
                ns_median,
                scalar_ops: scalar_ops(operation, &m, &z),
            });
        }
    }
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, CliError> {
    if cfg.sizes.is_empty() {
        return Err(CliError::Usage("bench needs at least one size".into()));
    }
    if let Some(&n) = cfg.sizes.iter().find(|&&n| n < 2) {
        return Err(CliError::Usage(format!(
            "size {n} is too small; use n >= 2"
        )));
    }
    for op in &cfg.operations {
        if !OPERATIONS.contains(&op.as_str()) {
            return Err(CliError::Usage(format!("unknown operation `{op}`")));
        }
    }
    let mut records = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for &field in &cfg.fields {
        match field {
            FieldSpec::Real => bench_field(cfg, field, &0.0f64, &mut rng, &mut records),
            FieldSpec::Complex => bench_field(
                cfg,
                field,
                &Complex64::new(0.0, 0.0),
                &mut rng,
                &mut records,
            ),
            FieldSpec::Quaternion => {
                bench_field(cfg, field, &Quaternion::ZERO, &mut rng, &mut records)
            }
            FieldSpec::Block => {
                let t = Block::<f64>::zeros(BENCH_BLOCK_K);
                bench_field(cfg, field, &t, &mut rng, &mut records)
            }
            FieldSpec::BlockComplex => {
                let t = Block::<Complex64>::zeros(BENCH_BLOCK_K);
                bench_field(cfg, field, &t, &mut rng, &mut records)
            }
            FieldSpec::BlockQuaternion => {
                let t = Block::<Quaternion>::zeros(BENCH_BLOCK_K);
                bench_field(cfg, field, &t, &mut rng, &mut records)
            }
        }
    }
    Ok(records)
}

/// Writes records as CSV. Floats use 17 significant digits so they read
/// back bit-for-bit.
pub fn write_csv<W: io::Write>(w: W, records: &[BenchRecord]) -> Result<(), csv::Error> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(CSV_HEADER)?;
    for r in records {
        wr.write_record([
            r.operation.clone(),
            r.field.clone(),
            r.n.to_string(),
            format!("{:.16e}", r.ns_median),
            r.scalar_ops.to_string(),
        ])?;
    }
    wr.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(r: R) -> Result<Vec<BenchRecord>, csv::Error> {
    csv::Reader::from_reader(r).deserialize().collect()
}

pub fn write_csv_file(path: &Path, records: &[BenchRecord]) -> Result<(), CliError> {
    let file = std::fs::File::create(path).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv(io::BufWriter::new(file), records)?;
    Ok(())
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// One line per (operation, field) series with its time and op-count slopes.
pub fn slope_report(records: &[BenchRecord]) -> String {
    let mut keys: Vec<(&str, &str)> = Vec::new();
    for r in records {
        let key = (r.operation.as_str(), r.field.as_str());
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let fmt = |s: Option<f64>| s.map_or_else(|| "n/a".to_string(), |s| format!("{s:.3}"));
    keys.iter()
        .map(|&(op, field)| {
            let series: Vec<&BenchRecord> = records
                .iter()
                .filter(|r| r.operation == op && r.field == field)
                .collect();
            let time: Vec<_> = series.iter().map(|r| (r.n as f64, r.ns_median)).collect();
            let ops: Vec<_> = series
                .iter()
                .map(|r| (r.n as f64, r.scalar_ops as f64))
                .collect();
            format!(
                "{op:<13} {field:<17} time slope {:>6}  op slope {:>6}\n",
                fmt(loglog_slope(&time)),
                fmt(loglog_slope(&ops))
            )
        })
        .collect()
}
