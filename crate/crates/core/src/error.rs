use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar literal {0:?} (expected -inf, a decimal, or a fraction p/q)")]
pub struct ScalarParseError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the all -inf vector does not represent a ray")]
    ZeroVector,
    #[error("vector does not satisfy the inequality system")]
    NotInCone,
    #[error("node {node} out of range for a hypergraph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },
    #[error("hyperedge {edge} has an empty tail or head")]
    EmptyHyperedge { edge: usize },
    #[error("hyperedge {edge} has a tail of size {tail_len}; the digraph visit needs singleton tails")]
    NotADigraph { edge: usize, tail_len: usize },
    #[error("support of size {support} exceeds the enumeration cap {cap}")]
    EnumerationCap { support: usize, cap: usize },
    #[error("combination precondition violated: {0}")]
    CombinePrecondition(&'static str),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid instance parameters: {0}")]
    InvalidSpec(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
