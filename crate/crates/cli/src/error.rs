use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("matrix is singular")]
    Singular,
    #[error("structure not representable: {0}")]
    NotRepresentable(arrowdpr_core::Error),
    #[error("{0}")]
    Math(arrowdpr_core::Error),
    #[error("{0} verification check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Singular => 3,
            CliError::NotRepresentable(_) => 4,
            _ => 2,
        }
    }
}

impl From<arrowdpr_core::Error> for CliError {
    fn from(e: arrowdpr_core::Error) -> Self {
        use arrowdpr_core::Error as E;
        match e {
            E::Singular => CliError::Singular,
            E::NotRepresentable => CliError::NotRepresentable(e),
            E::Dimension { .. }
            | E::TipOutOfRange { .. }
            | E::Empty
            | E::ShapeMismatch { .. }
            | E::NotSquare { .. } => CliError::Parse(e.to_string()),
            E::NonRealDeterminant => CliError::Math(e),
        }
    }
}
