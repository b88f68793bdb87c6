use thiserror::Error;

/// Reasons an edge set fails to describe a tree.
///
/// Variants that point at a specific edge carry its position in the input
/// slice so callers (the edge-list parser in particular) can map it back to
/// a source line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("expected {expected} edges for a tree of order {order}, found {found}")]
    EdgeCount {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        order: usize,
    },
    #[error("edge {edge}: self-loop on vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge}: duplicate edge {u}-{v}")]
    DuplicateEdge { edge: usize, u: usize, v: usize },
    #[error("edge {edge}: {u}-{v} closes a cycle")]
    Cycle { edge: usize, u: usize, v: usize },
}

impl StructureError {
    /// Index of the offending edge, when the error is attributable to one.
    pub fn edge(&self) -> Option<usize> {
        match *self {
            StructureError::VertexOutOfRange { edge, .. }
            | StructureError::SelfLoop { edge, .. }
            | StructureError::DuplicateEdge { edge, .. }
            | StructureError::Cycle { edge, .. } => Some(edge),
            StructureError::Empty | StructureError::EdgeCount { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a tree of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),
    #[error("not a tree: {0}")]
    Structure(#[from] StructureError),
    #[error("order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("alpha must be in [{min}, {max}] for n = {order} (got {alpha})")]
    Infeasible {
        order: usize,
        alpha: usize,
        min: usize,
        max: usize,
    },
    #[error("{0}")]
    Domain(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("the gap function needs c > d (got c = {c}, d = {d})")]
    GapOrder { c: u32, d: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
