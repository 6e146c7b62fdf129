use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: usage errors (bad parameters, violated
/// preconditions on public entry points) and internal invariant violations.
/// The latter signal a bug in a formula or a broken mathematical assumption,
/// never a bad input, and map to a distinct process exit code in the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("negative input to {0}")]
    NegativeInput(&'static str),

    #[error("elementary index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u64, max: u64 },

    #[error("descent condition violated: {0}")]
    DescentViolation(String),

    #[error("integrality violated in {context}: got {value}")]
    IntegralityViolation { context: String, value: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors that indicate a bug rather than a bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::IntegralityViolation { .. } | Error::InvariantViolation(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
