use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polytope has dimension {dim} but ambient dimension {ambient}; a full-dimensional polytope is required")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("polytope has no points")]
    EmptyPolytope,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("origin lies on the hyperplane of facet {facet}")]
    OriginOnFacetHyperplane { facet: usize },

    #[error("invalid pyramid: {0}")]
    InvalidPyramid(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown strategy `{name}` (available: {available})")]
    UnknownStrategy { name: String, available: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("enumeration needs {candidates} candidate points, above the cap of {cap}")]
    EnumerationCapExceeded { candidates: String, cap: u64 },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
