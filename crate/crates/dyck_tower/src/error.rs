use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("{0} has no rational square root")]
    NoSquareRoot(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index {index} out of range for {k} strands")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("operator needs at least one strand")]
    NoStrand,
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("gcd({m}, {n}) is not 1")]
    NotCoprime { m: u32, n: u32 },
    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("inadmissible point configuration: {0}")]
    Inadmissible(String),
    #[error("rewrite pattern does not match: {0}")]
    PatternMismatch(String),
    #[error("strand count mismatch: expected {expected}, found {found}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
