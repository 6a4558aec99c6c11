use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {{{0},{1}}} has no colors")]
    EmptyColorSet(Vertex, Vertex),
    #[error("unknown color {0}")]
    UnknownColor(String),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("duplicate color {0}")]
    DuplicateColor(String),
    #[error("invalid color name {0:?}")]
    InvalidColorName(String),
}

/// Error raised while reading one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The instance does not have the structure the algorithm requires.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Exhaustive enumeration produced more paths than allowed.
    #[error("enumeration exceeded the cap of {cap} paths")]
    Overflow { cap: usize },
    /// Input too large for an exhaustive routine.
    #[error("{what} has size {size}, above the limit {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("vertices {0} and {1} are adjacent, so the set is not independent")]
    NotIndependent(Vertex, Vertex),
    #[error("solution has {have} paths, fewer than the {need} edge colors")]
    TooFewPaths { have: usize, need: usize },
    #[error("element {0} belongs to no set")]
    UncoveredElement(usize),
    #[error("threshold set violates set {set}: {count} chosen elements, weight {weight}")]
    ThresholdViolated { set: usize, count: usize, weight: usize },
    #[error("invalid threshold set instance: {0}")]
    InvalidThresholdSet(String),
    #[error("solution does not match the reduced instance: {0}")]
    ForeignSolution(String),
    #[error("generator failed: {0}")]
    Generation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
