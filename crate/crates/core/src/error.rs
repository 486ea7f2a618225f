use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("quotient is not a Laurent polynomial")]
    NotDivisible,

    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("coordinate {index} is zero")]
    ZeroCoordinate { index: usize },

    #[error("t^(1/2) has no rational value at coordinate {index}")]
    NonRationalValue { index: usize },

    #[error("variable {index} carries a half-integer exponent")]
    NonIntegralExponent { index: usize },

    #[error("exact division failed after mutation prefix {prefix:?}")]
    LaurentPhenomenonViolation { prefix: Vec<usize> },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid exchange matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("level {level} outside the built range 0..{built}")]
    LevelOutOfRange { level: usize, built: usize },

    #[error("identity check failed: {0}")]
    IdentityFailure(String),

    #[error("exponent A^{0} does not map to a half-integer power of t")]
    ResultNotHalfIntegral(i64),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
