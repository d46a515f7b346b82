use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("loop at vertex {0}: loops are not allowed")]
    Loop(usize),
    #[error("vertex set must be a non-empty proper subset of V(G)")]
    ImproperSubset,
    #[error("sets must be disjoint")]
    NotDisjoint,
    #[error("graph of order {n} exceeds the supported bound {max} for {what}")]
    OrderBound { n: usize, max: usize, what: &'static str },
    #[error("graph has odd order {0}; odd cuts are only defined for even order here")]
    OddOrder(usize),
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("graph is class 2; no decomposition into perfect matchings")]
    Class2,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("search cap of {0} exceeded")]
    CapExceeded(u64),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
