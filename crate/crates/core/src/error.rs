use thiserror::Error;

/// Errors produced by the library.
///
/// `Parse` and `DimensionMismatch` describe malformed input; every other
/// variant is a violated domain precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0:?} is not a root of the finite root system")]
    NotARoot(Vec<i64>),

    #[error("window does not contain the order interval: {0}")]
    WindowTooSmall(String),

    #[error("weights are not neighbouring: {0}")]
    NotNeighbouring(String),

    #[error("weight is not in the class: {0}")]
    NotInClass(String),

    #[error("weight is not subgeneric: {0}")]
    NotSubgeneric(String),

    #[error("index {index} outside the window [-{radius}, {radius}]")]
    OutOfWindow { index: i64, radius: i64 },

    #[error("paths are not composable: {0}")]
    NotComposable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by malformed input rather than a failed
    /// mathematical precondition.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::DimensionMismatch { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
