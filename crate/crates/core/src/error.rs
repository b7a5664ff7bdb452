use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("graph6 cannot encode {0} vertices")]
    UnsupportedOrder(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("edge {0} is not in the graph")]
    EdgeNotFound(Edge),

    #[error("{0}")]
    OutOfRange(String),

    #[error("operation needs at least one vertex")]
    EmptyGraph,

    #[error("operation is undefined for complete graphs")]
    CompleteGraph,

    #[error("exhaustive search supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },

    #[error("cut size must be at least 1")]
    InvalidCutSize,

    #[error("no edge certificate for {edge} at t = {t}: deleting it keeps toughness at least t")]
    NoCertificate { edge: Edge, t: String },

    #[error("decomposition statistics need D(e) to be non-empty")]
    DecompositionUndefined,

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid rational {input:?}: {reason}")]
    InvalidRational { input: String, reason: String },

    #[error("t must be positive, got {0}")]
    NonPositiveT(String),
}

pub type Result<T> = std::result::Result<T, Error>;
