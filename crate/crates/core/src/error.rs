use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mean arguments must be positive and finite, got ({a}, {b})")]
    InvalidPair { a: f64, b: f64 },

    #[error("weight {p} outside the admissible range {range}")]
    WeightOutOfRange { p: f64, range: &'static str },

    #[error("precision of {bits} bits outside [{min}, {max}]", min = crate::Precision::MIN_BITS, max = crate::Precision::MAX_BITS)]
    InvalidPrecision { bits: u32 },

    #[error("sign of {what} could not be certified (last attempt at {bits} bits)")]
    InconclusiveSign { what: String, bits: u32 },

    #[error("no root of {what} in the search bracket")]
    NoRootInBracket { what: String },

    #[error("{relation}: coefficient of t^{degree} differs")]
    CoefficientMismatch { relation: &'static str, degree: usize },

    #[error("residual {residual:e} exceeds the requested tolerance {tol:e}")]
    ToleranceNotMet { residual: f64, tol: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
