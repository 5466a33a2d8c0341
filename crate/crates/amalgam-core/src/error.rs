//! Error type shared by every engine in the crate.

use core::fmt;

/// Errors surfaced by grid construction, transforms, norm engines and sweeps.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter fell outside its documented domain.
    InvalidParam(&'static str),
    /// A function (or its spectrum) does not decay below the tail threshold
    /// at the grid boundary; the reported value is relative to the peak.
    TailTruncation { boundary: f64 },
    /// Two operands live on different grids.
    GridMismatch,
    /// Translation offset is not an integer multiple of the grid spacing.
    OffGridShift,
    /// An exponent fit was requested on degenerate data.
    DegenerateFit,
    /// The sweep grid cannot represent the dilated function at this parameter.
    GridInadequate { lambda: f64 },
    /// Samples exceed the declared compact support.
    SupportViolation,
    /// Sweep parameter range contradicts the declared regime.
    RegimeMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParam(what) => write!(f, "invalid parameter: {what}"),
            Error::TailTruncation { boundary } => write!(
                f,
                "boundary tail {boundary:.3e} exceeds the 1e-12 truncation threshold"
            ),
            Error::GridMismatch => write!(f, "operands live on different grids"),
            Error::OffGridShift => write!(f, "shift is not a multiple of the grid spacing"),
            Error::DegenerateFit => write!(f, "exponent fit needs >= 4 strictly positive norms"),
            Error::GridInadequate { lambda } => {
                write!(f, "grid cannot resolve the dilated function at lambda = {lambda}")
            }
            Error::SupportViolation => write!(f, "samples exceed the declared compact support"),
            Error::RegimeMismatch => write!(f, "parameter range contradicts the sweep regime"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
