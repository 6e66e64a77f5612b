use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid part structure: {0}")]
    InvalidStructure(String),

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("vertices {u} and {v} both lie in part {part}")]
    IntraPartEdge { u: usize, v: usize, part: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("degenerate size: {0}")]
    Degenerate(String),

    #[error("inner graph rejected: {0}")]
    InvalidInner(String),

    #[error("instance too large: {vertices} vertices exceeds cap {cap}")]
    TooLarge { vertices: usize, cap: usize },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid graph file: {0}")]
    Format(String),

    /// A checked invariant failed. Always a bug in this crate.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn not_applicable(msg: impl Into<String>) -> Error {
    Error::NotApplicable(msg.into())
}
