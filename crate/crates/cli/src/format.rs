//! JSON matrix files.
//!
//! ```json
//! { "kind": "arrow", "field": "real", "n": 3, "tip": 3,
//!   "diag": [2, 3], "u": [1, 1], "v": [1, 1], "alpha": 1 }
//! ```
//!
//! Complex entries are `[re, im]`, quaternions `[a, b, c, d]`. With
//! `"field": "block"` every entry is a `block_k × block_k` row-major nested
//! array of the base encoding named by the optional `"base"` key (default
//! `"real"`). DPR1 files carry `diag`, `x`, `y`, `rho` instead.

use arrowdpr_core::{
    ArrowMatrix, BaseScalar, Block, Complex64, Dpr1Matrix, Quaternion, Scalar, StructuredMatrix,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Arrow,
    Dpr1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
    Quaternion,
    Block,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseField {
    Real,
    Complex,
    Quaternion,
}

/// On-disk layout, before entries are decoded.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    kind: Kind,
    field: Field,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tip: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    block_k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<BaseField>,
    diag: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rho: Option<Value>,
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// Decoding context: the block size, when entries are blocks.
#[derive(Clone, Copy, Debug)]
pub struct Layout {
    pub block_k: Option<usize>,
}

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar {
    fn decode(v: &Value, layout: Layout, path: &str) -> Result<Self, CliError>;
    fn encode(&self) -> Value;
    /// `field`, `block_k` and `base` keys describing this type.
    fn describe(&self) -> (Field, Option<usize>, Option<BaseField>);
}

fn number(v: &Value, path: &str) -> Result<f64, CliError> {
    v.as_f64()
        .ok_or_else(|| parse_err(format!("{path}: expected a number, found {v}")))
}

fn tuple<const N: usize>(v: &Value, path: &str, shape: &str) -> Result<[f64; N], CliError> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == N)
        .ok_or_else(|| parse_err(format!("{path}: expected {shape}, found {v}")))?;
    let mut out = [0.0; N];
    for (i, e) in arr.iter().enumerate() {
        out[i] = number(e, &format!("{path}[{i}]"))?;
    }
    Ok(out)
}

fn float(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

impl JsonScalar for f64 {
    fn decode(v: &Value, _: Layout, path: &str) -> Result<Self, CliError> {
        number(v, path)
    }
    fn encode(&self) -> Value {
        float(*self)
    }
    fn describe(&self) -> (Field, Option<usize>, Option<BaseField>) {
        (Field::Real, None, None)
    }
}

impl JsonScalar for Complex64 {
    fn decode(v: &Value, _: Layout, path: &str) -> Result<Self, CliError> {
        let [re, im] = tuple(v, path, "[re, im]")?;
        Ok(Complex64::new(re, im))
    }
    fn encode(&self) -> Value {
        Value::Array(vec![float(self.re), float(self.im)])
    }
    fn describe(&self) -> (Field, Option<usize>, Option<BaseField>) {
        (Field::Complex, None, None)
    }
}

impl JsonScalar for Quaternion {
    fn decode(v: &Value, _: Layout, path: &str) -> Result<Self, CliError> {
        let [a, b, c, d] = tuple(v, path, "[a, b, c, d]")?;
        Ok(Quaternion::new(a, b, c, d))
    }
    fn encode(&self) -> Value {
        Value::Array(self.to_array().iter().map(|&x| float(x)).collect())
    }
    fn describe(&self) -> (Field, Option<usize>, Option<BaseField>) {
        (Field::Quaternion, None, None)
    }
}

impl<B: BaseScalar + JsonScalar> JsonScalar for Block<B> {
    fn decode(v: &Value, layout: Layout, path: &str) -> Result<Self, CliError> {
        let k = layout
            .block_k
            .ok_or_else(|| parse_err("block_k: required when field is \"block\""))?;
        let rows = v
            .as_array()
            .filter(|r| r.len() == k)
            .ok_or_else(|| parse_err(format!("{path}: expected {k} block rows")))?;
        let mut entries = Vec::with_capacity(k * k);
        for (r, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .filter(|c| c.len() == k)
                .ok_or_else(|| parse_err(format!("{path}[{r}]: expected {k} block entries")))?;
            for (c, e) in row.iter().enumerate() {
                entries.push(B::decode(e, layout, &format!("{path}[{r}][{c}]"))?);
            }
        }
        Block::new(k, entries).map_err(|e| parse_err(format!("{path}: {e}")))
    }
    fn encode(&self) -> Value {
        Value::Array(
            self.rows()
                .map(|row| Value::Array(row.iter().map(JsonScalar::encode).collect()))
                .collect(),
        )
    }
    fn describe(&self) -> (Field, Option<usize>, Option<BaseField>) {
        let base = match B::zero().describe().0 {
            Field::Complex => BaseField::Complex,
            Field::Quaternion => BaseField::Quaternion,
            _ => BaseField::Real,
        };
        (Field::Block, Some(self.k()), Some(base))
    }
}

/// A parsed matrix file, dispatched on its scalar type.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Real(StructuredMatrix<f64>),
    Complex(StructuredMatrix<Complex64>),
    Quaternion(StructuredMatrix<Quaternion>),
    RealBlock(StructuredMatrix<Block<f64>>),
    ComplexBlock(StructuredMatrix<Block<Complex64>>),
    QuaternionBlock(StructuredMatrix<Block<Quaternion>>),
}

fn required<T>(value: Option<T>, key: &str, kind: Kind) -> Result<T, CliError> {
    value.ok_or_else(|| parse_err(format!("{key}: required for kind {kind:?}")))
}

fn forbidden<T>(value: &Option<T>, key: &str, kind: Kind) -> Result<(), CliError> {
    if value.is_some() {
        Err(parse_err(format!("{key}: not allowed for kind {kind:?}")))
    } else {
        Ok(())
    }
}

fn decode_vec<S: JsonScalar>(
    vals: &[Value],
    layout: Layout,
    key: &str,
) -> Result<Vec<S>, CliError> {
    vals.iter()
        .enumerate()
        .map(|(i, v)| S::decode(v, layout, &format!("{key}[{i}]")))
        .collect()
}

fn expect_len(key: &str, found: usize, expected: usize) -> Result<(), CliError> {
    if found == expected {
        Ok(())
    } else {
        Err(parse_err(format!(
            "{key}: expected {expected} entries, found {found}"
        )))
    }
}

fn decode_matrix<S: JsonScalar>(
    raw: &RawFile,
    layout: Layout,
) -> Result<StructuredMatrix<S>, CliError> {
    let n = raw.n;
    if n == 0 {
        return Err(parse_err("n: must be at least 1"));
    }
    let structural = |e: arrowdpr_core::Error| parse_err(e.to_string());
    match raw.kind {
        Kind::Arrow => {
            for (key, val) in [("x", &raw.x), ("y", &raw.y)] {
                forbidden(val, key, raw.kind)?;
            }
            forbidden(&raw.rho, "rho", raw.kind)?;
            let tip = required(raw.tip, "tip", raw.kind)?;
            let u = required(raw.u.as_deref(), "u", raw.kind)?;
            let v = required(raw.v.as_deref(), "v", raw.kind)?;
            let alpha = required(raw.alpha.as_ref(), "alpha", raw.kind)?;
            for (key, len) in [("diag", raw.diag.len()), ("u", u.len()), ("v", v.len())] {
                expect_len(key, len, n - 1)?;
            }
            if tip == 0 || tip > n {
                return Err(parse_err(format!("tip: {tip} outside 1..={n}")));
            }
            let a = ArrowMatrix::new(
                decode_vec(&raw.diag, layout, "diag")?,
                decode_vec(u, layout, "u")?,
                decode_vec(v, layout, "v")?,
                S::decode(alpha, layout, "alpha")?,
                tip,
            )
            .map_err(structural)?;
            Ok(StructuredMatrix::Arrow(a))
        }
        Kind::Dpr1 => {
            for (key, val) in [("u", &raw.u), ("v", &raw.v)] {
                forbidden(val, key, raw.kind)?;
            }
            forbidden(&raw.alpha, "alpha", raw.kind)?;
            forbidden(&raw.tip, "tip", raw.kind)?;
            let x = required(raw.x.as_deref(), "x", raw.kind)?;
            let y = required(raw.y.as_deref(), "y", raw.kind)?;
            let rho = required(raw.rho.as_ref(), "rho", raw.kind)?;
            for (key, len) in [("diag", raw.diag.len()), ("x", x.len()), ("y", y.len())] {
                expect_len(key, len, n)?;
            }
            let a = Dpr1Matrix::new(
                decode_vec(&raw.diag, layout, "diag")?,
                decode_vec(x, layout, "x")?,
                decode_vec(y, layout, "y")?,
                S::decode(rho, layout, "rho")?,
            )
            .map_err(structural)?;
            Ok(StructuredMatrix::Dpr1(a))
        }
    }
}

impl AnyMatrix {
    pub fn parse(text: &str) -> Result<AnyMatrix, CliError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        let layout = Layout {
            block_k: raw.block_k,
        };
        if raw.field != Field::Block {
            if raw.block_k.is_some() {
                return Err(parse_err("block_k: only allowed when field is \"block\""));
            }
            if raw.base.is_some() {
                return Err(parse_err("base: only allowed when field is \"block\""));
            }
        } else if matches!(raw.block_k, None | Some(0)) {
            return Err(parse_err(
                "block_k: required positive size when field is \"block\"",
            ));
        }
        Ok(match (raw.field, raw.base.unwrap_or(BaseField::Real)) {
            (Field::Real, _) => AnyMatrix::Real(decode_matrix(&raw, layout)?),
            (Field::Complex, _) => AnyMatrix::Complex(decode_matrix(&raw, layout)?),
            (Field::Quaternion, _) => AnyMatrix::Quaternion(decode_matrix(&raw, layout)?),
            (Field::Block, BaseField::Real) => AnyMatrix::RealBlock(decode_matrix(&raw, layout)?),
            (Field::Block, BaseField::Complex) => {
                AnyMatrix::ComplexBlock(decode_matrix(&raw, layout)?)
            }
            (Field::Block, BaseField::Quaternion) => {
                AnyMatrix::QuaternionBlock(decode_matrix(&raw, layout)?)
            }
        })
    }

    pub fn layout(&self) -> Layout {
        fn k<B: BaseScalar>(m: &StructuredMatrix<Block<B>>) -> Option<usize> {
            match m {
                StructuredMatrix::Arrow(a) => Some(a.alpha().k()),
                StructuredMatrix::Dpr1(a) => Some(a.rho().k()),
            }
        }
        let block_k = match self {
            AnyMatrix::RealBlock(m) => k(m),
            AnyMatrix::ComplexBlock(m) => k(m),
            AnyMatrix::QuaternionBlock(m) => k(m),
            _ => None,
        };
        Layout { block_k }
    }
}

/// Serializes a structured matrix in the file format.
pub fn to_json<S: JsonScalar>(m: &StructuredMatrix<S>) -> Value {
    let enc = |v: &[S]| v.iter().map(JsonScalar::encode).collect::<Vec<_>>();
    let (field, block_k, base) = match m {
        StructuredMatrix::Arrow(a) => a.alpha().describe(),
        StructuredMatrix::Dpr1(a) => a.rho().describe(),
    };
    let mut raw = RawFile {
        kind: Kind::Arrow,
        field,
        n: m.n(),
        tip: None,
        block_k,
        base,
        diag: Vec::new(),
        u: None,
        v: None,
        alpha: None,
        x: None,
        y: None,
        rho: None,
    };
    match m {
        StructuredMatrix::Arrow(a) => {
            raw.tip = Some(a.tip());
            raw.diag = enc(a.diag());
            raw.u = Some(enc(a.u()));
            raw.v = Some(enc(a.v()));
            raw.alpha = Some(a.alpha().encode());
        }
        StructuredMatrix::Dpr1(a) => {
            raw.kind = Kind::Dpr1;
            raw.diag = enc(a.diag());
            raw.x = Some(enc(a.x()));
            raw.y = Some(enc(a.y()));
            raw.rho = Some(a.rho().encode());
        }
    }
    serde_json::to_value(raw).expect("plain data serializes")
}

/// Parses a JSON array of entries, e.g. the `--vec` file.
pub fn parse_vector<S: JsonScalar>(text: &str, layout: Layout) -> Result<Vec<S>, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("vector: {e}")))?;
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err("vector: expected a JSON array"))?;
    decode_vec(arr, layout, "vector")
}

pub fn vector_to_json<S: JsonScalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(JsonScalar::encode).collect())
}
