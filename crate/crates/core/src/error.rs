use thiserror::Error;

use crate::graph::Edge;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),

    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("automorphism group order exceeds cap of {cap}")]
    AutCapExceeded { cap: usize },

    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("labeling covers {got} elements, expected {expected}")]
    LabelingSize { expected: usize, got: usize },

    #[error("labeling does not cover exactly the edge set")]
    EdgeLabelingDomain,

    #[error("search node budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("distinguishing index undefined: a non-identity automorphism fixes every edge")]
    IndexUndefined,

    #[error("oracle size bound exceeded: {0}")]
    OracleBound(String),

    #[error("base labeling is not distinguishing on the source graph")]
    BaseNotDistinguishing,

    #[error("rule {rule} does not accept site {site}")]
    RuleSiteMismatch { rule: String, site: String },

    #[error("construction not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
