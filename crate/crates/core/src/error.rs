use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("vertex {0} paired with itself")]
    SameVertex(VertexId),
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed size header")]
    BadHeader,
    #[error("invalid character {byte:#04x} at offset {offset}")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("payload has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonZeroPadding,
}

/// Errors from operations whose preconditions concern graph structure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("need at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("graph contains the triangle {0:?}")]
    Triangle([VertexId; 3]),
    #[error("{0:?} is not an induced 5-cycle")]
    NotInducedFiveCycle([VertexId; 5]),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomomorphismError {
    #[error("assignment has {found} entries for a source graph on {expected} vertices")]
    WrongLength { expected: usize, found: usize },
    #[error("source vertex {source_vertex} maps to {target}, outside a target graph on {n} vertices")]
    TargetOutOfRange { source_vertex: VertexId, target: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("pattern graph is empty")]
    EmptyPattern,
    #[error("{sizes} part sizes given for a pattern on {pattern} vertices")]
    SizeCount { sizes: usize, pattern: usize },
    #[error("part {0} has size zero")]
    ZeroSize(usize),
    #[error("{n} vertices cannot be split into {parts} nonempty parts")]
    TooFewVertices { n: usize, parts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("{family} requires {requirement}, got {value}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
        value: String,
    },
    #[error("n = {n} outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Blowup(#[from] BlowupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
