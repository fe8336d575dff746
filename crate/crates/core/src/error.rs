use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("angle {num}/{den}·π requires approx mode")]
    AngleRequiresApprox { num: i64, den: i64 },

    #[error("degenerate angle: {0}")]
    DegenerateAngle(String),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is not positive on [0, ∞)")]
    NotPositive,

    #[error("no multiplier of degree <= {cap} (exceeded cap)")]
    ExceededCap { cap: usize },

    #[error("lines parallel: slopes coincide")]
    LinesParallel,

    #[error("search exhausted after {iterations} rungs: {detail}")]
    SearchExhausted { iterations: usize, detail: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
