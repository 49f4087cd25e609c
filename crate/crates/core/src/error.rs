use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification of failures, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or invariant-violating input.
    Invalid,
    /// Two inputs live over different ground sets or ambients.
    Mismatch,
    /// An exhaustive search was refused because the input is too large.
    Guard,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set mismatch")]
    GroundSetMismatch,
    #[error("ambient mismatch")]
    AmbientMismatch,
    #[error("{what}: size {size} exceeds the guard {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("point ({a}, {b}) lies outside the ambient")]
    PointOutsideAmbient { a: String, b: String },
    #[error("epsilon must be nonnegative")]
    NegativeEpsilon,
    #[error("interval ({a}, {b}) is empty")]
    EmptyInterval { a: String, b: String },
    #[error("simplex must be nonempty")]
    EmptySimplex,
    #[error("expected a filtration over a one-point set")]
    NotOnePoint,
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("not a dendrogram: {0}")]
    NotADendrogram(String),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::GroundSetMismatch | Error::AmbientMismatch => ErrorKind::Mismatch,
            Error::SizeGuardExceeded { .. } => ErrorKind::Guard,
            _ => ErrorKind::Invalid,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::SizeGuardExceeded { what, size, limit })
        } else {
            Ok(())
        }
    }
}
