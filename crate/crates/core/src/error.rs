use thiserror::Error;

/// Error type shared by the whole crate. Variants map onto the CLI exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (polynomial or germ file). Exit code 2.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Input is degenerate or an invariant is not finite. Exit code 3.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Randomized genericity could not be certified after retries, or an
    /// explicitly supplied matrix fails the rank/validity checks. Exit code 4.
    #[error("genericity failure: {0}")]
    Genericity(String),

    /// The configured reduction-step budget was exhausted. Exit code 5.
    #[error("step budget exceeded")]
    BudgetExceeded,
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Degenerate(_) => 3,
            Error::Genericity(_) => 4,
            Error::BudgetExceeded => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
