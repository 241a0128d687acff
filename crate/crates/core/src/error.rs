use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph of {requested} vertices exceeds capacity {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Why a vertex set fails to be a (minimal) dominating set, or why a
/// minimalization request is malformed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DomsetError {
    #[error("vertex {0} is not dominated")]
    NotDominating(usize),
    #[error("vertex {0} is neither isolated in the set nor has a private neighbor")]
    NotMinimal(usize),
    #[error("forced vertex {0} is neither isolated in the set nor has a private neighbor")]
    ForcedNotProtected(usize),
    #[error("forced vertex {0} is not in the set")]
    ForcedOutsideSet(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph on {n} vertices exceeds the limit {limit} of this solver")]
    TooLarge { n: usize, limit: usize },
    #[error("required vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("N[D^P] and D^I do not cover V(H)")]
    CoverConditionFailed,
    #[error("the first factor has no edge")]
    Trivial,
    #[error("witness of size {size} falls short of the claimed bound {claimed}")]
    BoundNotMet { size: usize, claimed: usize },
    #[error("unknown construction '{0}'")]
    UnknownConstruction(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("construction produced an invalid witness: {0}")]
    Domset(#[from] DomsetError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
