//! Crate-wide error type.

use std::fmt;

#[derive(Debug)]
pub enum Error {
    /// Two operands live in different dimensions.
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    /// Dimension is not a prime number.
    NotPrime(usize),
    /// Dimension outside the supported range 2..=31.
    DimensionOutOfRange(usize),
    /// Basis or level index out of range.
    IndexOutOfRange {
        index: usize,
        bound: usize,
    },
    /// Operator power outside 1..=d-1.
    PowerOutOfRange {
        power: usize,
        dim: usize,
    },
    /// Matrix expected to be unitary is not, within tolerance.
    NotUnitary {
        residual: f64,
    },
    /// Amplitude vector is not normalized within tolerance.
    NotNormalized {
        norm: f64,
    },
    /// A value that must be finite is NaN or infinite.
    NonFinite,
    /// Iterative eigensolver failed to converge.
    EigenConvergence {
        off_diagonal: f64,
    },
    /// POVM coefficients violate the conjugate-pairing constraint.
    CoefficientConstraint {
        residual: f64,
    },
    /// A provably real quantity came out with too much imaginary part.
    ImaginaryResidue {
        residual: f64,
    },
    /// Two independent computation paths disagree.
    CrossCheckFailed {
        delta: f64,
    },
    /// Wrong number of phase angles for the dimension.
    AngleCount {
        expected: usize,
        got: usize,
    },
    /// Phase grid has fewer than 8 points per axis.
    GridTooSmall(usize),
    /// Phase grid would exceed the desk-scale point budget.
    GridTooLarge {
        points: u128,
    },
    /// State file failed schema or content validation.
    InvalidStateFile(String),
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NotPrime(d) => write!(f, "dimension must be prime (got {d})"),
            Error::DimensionOutOfRange(d) => {
                write!(f, "dimension must be between 2 and 31 (got {d})")
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::PowerOutOfRange { power, dim } => {
                write!(
                    f,
                    "power {power} out of range 1..={} for dimension {dim}",
                    dim - 1
                )
            }
            Error::NotUnitary { residual } => {
                write!(f, "matrix is not unitary (residual {residual:.3e})")
            }
            Error::NotNormalized { norm } => {
                write!(f, "state is not normalized (norm {norm:.12})")
            }
            Error::NonFinite => write!(f, "non-finite value encountered"),
            Error::EigenConvergence { off_diagonal } => {
                write!(
                    f,
                    "eigensolver failed to converge (off-diagonal {off_diagonal:.3e})"
                )
            }
            Error::CoefficientConstraint { residual } => write!(
                f,
                "coefficients must satisfy gamma[d-k] = conj(gamma[k]) (residual {residual:.3e})"
            ),
            Error::ImaginaryResidue { residual } => {
                write!(f, "imaginary residue {residual:.3e} exceeds tolerance")
            }
            Error::CrossCheckFailed { delta } => {
                write!(f, "independent computation paths disagree by {delta:.3e}")
            }
            Error::AngleCount { expected, got } => {
                write!(f, "expected {expected} phase angles, got {got}")
            }
            Error::GridTooSmall(n) => {
                write!(f, "grid must have at least 8 points per axis (got {n})")
            }
            Error::GridTooLarge { points } => {
                write!(f, "grid of {points} points exceeds the supported budget")
            }
            Error::InvalidStateFile(msg) => write!(f, "malformed state file: {msg}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
            Error::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            Error::Json(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}
