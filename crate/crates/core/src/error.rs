use thiserror::Error;

/// Errors raised across the library. Each variant names the precondition
/// that was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("dangling endpoint: arrow `{arrow}` refers to unknown vertex `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("dimension vector mismatch: {0}")]
    DimMismatch(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("non-square matrix: {rows} rows, {cols} columns")]
    NonSquare { rows: usize, cols: usize },
    #[error("not a cycle: path from `{source_vertex}` to `{target}`")]
    NotACycle {
        source_vertex: String,
        target: String,
    },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("zero polynomial has no weight")]
    ZeroPolynomial,
    #[error("quiver mismatch: {0}")]
    QuiverMismatch(String),
    #[error("pair is not standard: {0}")]
    NotStandard(String),
    #[error("quiver has an oriented cycle through `{0}`")]
    HasOrientedCycle(String),
    #[error("Euler pairing is {0}, expected 0")]
    EulerNonzero(i64),
    #[error("singular matrix")]
    Singular,
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
