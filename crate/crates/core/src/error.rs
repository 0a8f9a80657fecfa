use thiserror::Error;

/// Errors raised by the exact-arithmetic and operator layers.
///
/// Every failure mode is loud: degree truncation, window truncation and
/// division by zero are reported, never silently absorbed into a wrong
/// answer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("degree {degree} exceeds truncation bound {trunc}")]
    DegreeOverflow { degree: u32, trunc: u32 },

    #[error("z-exponent {k} lies outside the retained window (exact up to z^{hi})")]
    WindowOutOfRange { k: i64, hi: i64 },

    #[error("series has no invertible leading coefficient")]
    NonInvertibleSeries,

    #[error("fundamental vector is not in the span of Schur images")]
    FundSolveInconsistent,

    #[error("non-removable singularity at q=1")]
    SingularAtQOne,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("alphabet rejected: {0}")]
    BadAlphabet(String),
}

pub type Result<T> = std::result::Result<T, AlgError>;
