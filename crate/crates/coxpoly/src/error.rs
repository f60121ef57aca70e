use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the algebraic operations.
///
/// Each variant corresponds to a violated precondition; parsers use
/// [`ParseError`] instead so they can carry line positions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not palindromic in its ambient space")]
    NotPalindromic,
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("matrix does not square to zero")]
    NotSquareZero,
    #[error("quiver has an oriented cycle")]
    NotAcyclic,
    #[error("vertex {vertex} is neither a sink nor a source")]
    NotSinkOrSource { vertex: usize },
    #[error("arrows between vertices {u} and {v} do not reduce to a simple edge")]
    NotSimple { u: usize, v: usize },
    #[error("quiver is not bipartite: vertex {vertex} has both incoming and outgoing arrows")]
    NotBipartite { vertex: usize },
    #[error("quiver has parallel arrows {u} -> {v}")]
    HasParallelArrows { u: usize, v: usize },
    #[error("operation needs at least {min} vertices, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not bipartite (it contains an odd cycle)")]
    NotBipartiteGraph,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("unknown campaign `{0}`")]
    UnknownCampaign(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
}

/// A parse failure with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}
