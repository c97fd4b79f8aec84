use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("F_p(S) is infinite: {0}")]
    InfiniteFrobenius(String),
    #[error("oracle budget exceeded: {0}")]
    OracleBudget(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Overflow(_) => "OVERFLOW",
            Error::LengthMismatch { .. } | Error::Validation(_) => "VALIDATION",
            Error::Unsupported(_) => "UNSUPPORTED",
            Error::InfiniteFrobenius(_) => "PRECONDITION",
            Error::OracleBudget(_) => "ORACLE_BUDGET",
        }
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
