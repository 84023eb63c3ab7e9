//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined for the unit ideal")]
    UnitIdeal,

    #[error("colon by the zero ideal")]
    ColonByZero,

    #[error("ideal is not m-primary: no pure power of variable {var}")]
    NotMPrimary { var: String },

    #[error("power must be at least 1")]
    NonPositivePower,

    #[error("length table of size {n} did not stabilize the h-polynomial")]
    SeriesNotStabilized { n: usize },

    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,

    #[error("Sally series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("no valid reduction drawn after {attempts} attempts (seeds {seeds:?})")]
    ReductionDrawFailed { attempts: u32, seeds: Vec<u64> },

    #[error("no reduction number within bound {bound}")]
    NoReductionWithinBound { bound: u32 },

    #[error("denominator not contained in numerator in degree {degree}")]
    InclusionViolated { degree: u64 },

    #[error("quotient not finite within degree cap {cap}")]
    NonFiniteQuotient { cap: u64 },

    #[error("ideal is not equigenerated: generator degrees {0} and {1}")]
    NotEquigenerated(u64, u64),

    #[error("operation requires the standard grading")]
    NonStandardGrading,

    #[error("degenerate constraint system: {0}")]
    DegenerateSystem(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}
