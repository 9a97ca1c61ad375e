//! The `compute` subcommand.

use arrowdpr_core::{Block, Complex64, Determinant, Quaternion, StructuredMatrix};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::{parse_vector, to_json, vector_to_json, AnyMatrix, JsonScalar, Layout};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Operation {
    Det,
    Inv,
    Matvec,
}

/// How a determinant is printed for each scalar type.
pub trait DetOutput: JsonScalar {
    fn det_json(det: &Determinant<Self>) -> Result<Value, CliError>;
}

impl DetOutput for f64 {
    fn det_json(det: &Determinant<Self>) -> Result<Value, CliError> {
        Ok(det.value().encode())
    }
}

impl DetOutput for Complex64 {
    fn det_json(det: &Determinant<Self>) -> Result<Value, CliError> {
        Ok(det.value().encode())
    }
}

/// Quaternion determinants are reported as the Study determinant `|det A|`.
impl DetOutput for Quaternion {
    fn det_json(det: &Determinant<Self>) -> Result<Value, CliError> {
        Ok(det.study().encode())
    }
}

impl DetOutput for Block<f64> {
    fn det_json(det: &Determinant<Self>) -> Result<Value, CliError> {
        Ok(json!({ "block": det.block().encode(), "det": det.reduce().encode() }))
    }
}

impl DetOutput for Block<Complex64> {
    fn det_json(det: &Determinant<Self>) -> Result<Value, CliError> {
        Ok(json!({ "block": det.block().encode(), "det": det.reduce().encode() }))
    }
}

impl DetOutput for Block<Quaternion> {
    fn det_json(det: &Determinant<Self>) -> Result<Value, CliError> {
        Ok(json!({ "block": det.block().encode(), "det": det.study()?.encode() }))
    }
}

fn compute_typed<S: DetOutput>(
    m: &StructuredMatrix<S>,
    op: Operation,
    vector: Option<&str>,
    layout: Layout,
    tol: f64,
) -> Result<Value, CliError> {
    match op {
        Operation::Det => S::det_json(&m.det(tol)?),
        Operation::Inv => Ok(to_json(&m.inverse(tol)?)),
        Operation::Matvec => {
            let text =
                vector.ok_or_else(|| CliError::Usage("matvec requires --vec FILE".into()))?;
            let z: Vec<S> = parse_vector(text, layout)?;
            Ok(vector_to_json(&m.matvec(&z)?))
        }
    }
}

/// Evaluates `op` and renders the result as JSON text.
pub fn compute(
    matrix: &AnyMatrix,
    op: Operation,
    vector: Option<&str>,
    tol: f64,
) -> Result<String, CliError> {
    if tol.is_nan() || tol < 0.0 {
        return Err(CliError::Usage(format!(
            "--tol must be nonnegative, got {tol}"
        )));
    }
    let layout = matrix.layout();
    let value = match matrix {
        AnyMatrix::Real(m) => compute_typed(m, op, vector, layout, tol),
        AnyMatrix::Complex(m) => compute_typed(m, op, vector, layout, tol),
        AnyMatrix::Quaternion(m) => compute_typed(m, op, vector, layout, tol),
        AnyMatrix::RealBlock(m) => compute_typed(m, op, vector, layout, tol),
        AnyMatrix::ComplexBlock(m) => compute_typed(m, op, vector, layout, tol),
        AnyMatrix::QuaternionBlock(m) => compute_typed(m, op, vector, layout, tol),
    }?;
    Ok(match op {
        Operation::Inv => serde_json::to_string_pretty(&value),
        _ => serde_json::to_string(&value),
    }
    .expect("JSON values serialize"))
}
