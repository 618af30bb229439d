use thiserror::Error;

/// Errors produced by graph construction, the algorithms and the harness.
///
/// Node identifiers are carried in their `Debug` rendering so that the error
/// type does not need to be generic over the node type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge {0}: loops are not allowed")]
    InvalidEdge(String),
    #[error("edge {0} already present")]
    DuplicateEdge(String),
    #[error("node {0} not present")]
    MissingNode(String),
    #[error("edge {0} not present")]
    MissingEdge(String),
    #[error("{0}")]
    WrongMode(&'static str),
    #[error("element {0} already present")]
    AlreadyPresent(String),
    #[error("element {0} was never created")]
    MissingElement(String),
    #[error("graph contains a cycle")]
    CyclicGraph,
    #[error("negative cycle")]
    NegativeCycle,
    #[error("negative edge weight on {0}")]
    NegativeWeight(String),
    #[error("no path to target {0}")]
    NoPath(String),
    #[error("parent links do not lead back to the source from {0}")]
    BrokenParentChain(String),
    #[error("matrix node sets do not match")]
    ShapeMismatch,
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("instance too large for exhaustive enumeration: {nodes} nodes (limit {limit})")]
    TooLarge { nodes: usize, limit: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("unknown algorithm {0:?}")]
    UnknownAlgorithm(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn not_directed() -> Error {
    Error::WrongMode("graph is not directed")
}

pub(crate) fn not_undirected() -> Error {
    Error::WrongMode("graph is directed")
}
