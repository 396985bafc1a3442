use thiserror::Error;

use crate::Objective;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("numbering has {found} entries but the graph has {expected} vertices")]
    NumberingLength { expected: usize, found: usize },

    #[error("numbering is not a permutation of 1..={n}: {reason}")]
    NotBijective { n: usize, reason: String },

    #[error("invalid class parameters: {0}")]
    InvalidParams(String),

    #[error("{{{0}, {1}, {2}}} is not a triangle of the graph")]
    NotATriangle(usize, usize, usize),

    #[error("{{{0}, {1}, {2}}} is not a current face of the triangulation")]
    NotAFace(usize, usize, usize),

    #[error("graph is not a tree: {0}")]
    NotATree(&'static str),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph too small: {0}")]
    TooSmall(&'static str),

    #[error("dimple trace does not replay to the given graph")]
    TraceMismatch,

    #[error("no closed form for {class} ({objective})")]
    NoFormula { class: String, objective: Objective },

    #[error("{n} vertices exceeds the exhaustive-search cap of {cap}; use branch-and-bound")]
    CapExceeded { n: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported: {0}")]
    Unsupported(String),
}
