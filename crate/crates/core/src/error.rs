use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no square root of {a} modulo {p}")]
    NoSquareRoot { a: i64, p: u64 },

    #[error("inadmissible pair ({p1}, {p2}): {reason}")]
    InadmissiblePair { p1: u64, p2: u64, reason: String },

    #[error("inadmissible third prime {p3}: {reason}")]
    InadmissibleThirdPrime { p3: u64, reason: String },

    #[error("no normalized solution for ({p1}, {p2}) within search radius {radius}")]
    NormalizationExhausted { p1: u64, p2: u64, radius: i64 },

    #[error("splitting oracle inapplicable: {0}")]
    OracleInapplicable(String),

    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("checkpoint invalid: {0}")]
    CheckpointInvalid(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the CLI and the C status codes.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) => 2,
            Error::NoSquareRoot { .. }
            | Error::InadmissiblePair { .. }
            | Error::InadmissibleThirdPrime { .. }
            | Error::OracleInapplicable(_) => 3,
            Error::Io(_) => 4,
            Error::CheckpointInvalid(_) => 5,
            Error::NormalizationExhausted { .. } | Error::Consistency(_) => 6,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::NoSquareRoot { .. } => "no-square-root",
            Error::InadmissiblePair { .. } => "inadmissible-pair",
            Error::InadmissibleThirdPrime { .. } => "inadmissible-third-prime",
            Error::NormalizationExhausted { .. } => "normalization-exhausted",
            Error::OracleInapplicable(_) => "oracle-inapplicable",
            Error::Consistency(_) => "consistency",
            Error::CheckpointInvalid(_) => "checkpoint-invalid",
            Error::Io(_) => "io",
        }
    }
}
