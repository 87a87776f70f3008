use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph has more than {0} vertices")]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    #[error("partition is over {partition} vertices, graph has {graph}")]
    VertexCountMismatch { partition: usize, graph: usize },
    #[error("cannot identify a vertex with itself")]
    SameVertex,
    #[error("embeddings do not induce equal subgraphs")]
    EmbeddingMismatch,
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("term order is not an elimination order for {0} variables")]
    WrongOrder(usize),
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("not a binomial")]
    NotBinomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("coordinate arrangement failed: {0}")]
    Arrangement(String),
    #[error("computation incomplete: {0}")]
    Incomplete(String),
    #[error("check does not apply: {0}")]
    NotApplicable(String),
    #[error("timed out after {0} s")]
    Timeout(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
