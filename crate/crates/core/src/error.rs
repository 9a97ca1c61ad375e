use core::fmt;

/// A scalar had no multiplicative inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularScalar;

impl fmt::Display for SingularScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("scalar is not invertible")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector or array had the wrong length.
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// Tip position outside `1..=n`.
    TipOutOfRange {
        tip: usize,
        n: usize,
    },
    /// Matrices must have at least one row.
    Empty,
    /// Entries of one matrix do not share a shape (block size mismatch).
    ShapeMismatch {
        what: &'static str,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    /// The matrix is singular.
    Singular,
    /// An element-level inverse required by the structured formulas does not
    /// exist, so the result cannot be expressed in structured form. Only
    /// reachable with block entries.
    NotRepresentable,
    /// The complex image of a quaternion matrix produced a determinant with a
    /// non-negligible imaginary part.
    NonRealDeterminant,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected length {expected}, found {found}"),
            Error::TipOutOfRange { tip, n } => {
                write!(f, "tip position {tip} outside 1..={n}")
            }
            Error::Empty => f.write_str("matrix must have at least one row"),
            Error::ShapeMismatch { what } => write!(f, "{what}: inconsistent element shapes"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::Singular => f.write_str("matrix is singular"),
            Error::NotRepresentable => f.write_str(
                "an element inverse required by the structured formulas does not exist; \
                 the formulas cannot be applied",
            ),
            Error::NonRealDeterminant => {
                f.write_str("complex image determinant has a non-negligible imaginary part")
            }
        }
    }
}

impl From<SingularScalar> for Error {
    fn from(_: SingularScalar) -> Self {
        Error::NotRepresentable
    }
}
