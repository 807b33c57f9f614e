use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid weight on edge {{{0}, {1}}}: weights must be >= 1")]
    InvalidWeight(String, String),

    #[error("vertex count {0} exceeds the enumeration bound {1}")]
    EnumerationBound(usize, usize),

    #[error("the permutation is not a graph automorphism (edge {{{0}, {1}}} is not preserved)")]
    NotAnAutomorphism(String, String),

    #[error("the proposed total order is not admissible: {0}")]
    InadmissibleOrder(String),

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),

    #[error("non-edge {{{0}, {1}}} maps onto a nonzero bracket; not an endomorphism of the graded Lie ring")]
    BracketViolation(String, String),

    #[error("induced central matrix is not invertible over the integers")]
    CentralNotUnimodular,

    #[error("weighted integrality gate failed at entry ({0}, {1}): {2} is not an integer")]
    IntegralityViolation(String, String, String),

    #[error("invalid quadratic extension: d = {0} must be square-free and > 1")]
    NotSquareFree(i64),

    #[error("empty edge set")]
    EmptyEdgeSet,

    #[error("no edge has both endpoints in singleton coherent components")]
    NoPinnableEdge,

    #[error("certification refused: automorphism {sigma} moves the pinned edge {{{e0_a}, {e0_b}}} to {{{img_a}, {img_b}}}")]
    PinnedEdgeMoved {
        sigma: String,
        e0_a: String,
        e0_b: String,
        img_a: String,
        img_b: String,
    },

    #[error("weight multiplier must be at least 2, got {0}")]
    WeightTooSmall(u64),

    #[error("certificate verification failed: {0}")]
    CertificateMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
