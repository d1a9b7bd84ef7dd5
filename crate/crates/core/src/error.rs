use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("the zero polynomial has no roots to analyse")]
    ZeroPolynomial,

    #[error("polynomial is not real-rooted")]
    NotRealRooted,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid bound: {0}")]
    InvalidBound(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unsupported graph: {0}")]
    Unsupported(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
