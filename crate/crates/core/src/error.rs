use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid graph family parameters: {0}")]
    InvalidFamily(String),
    #[error("vertices {0} and {1} must be distinct")]
    SameVertex(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid graph6 input: {0}")]
    Graph6(String),
    #[error("invalid degree sequence: {0}")]
    SequenceParse(String),
    #[error("degree sequence ({0}) is not graphical")]
    NotGraphical(String),
    #[error("sequence length {len} exceeds the configured bound {bound}")]
    LengthBound { len: usize, bound: usize },
    #[error("order {n} exceeds the enumeration bound {bound}")]
    EnumerationBound { n: usize, bound: usize },
    #[error("invalid split partition: {0}")]
    InvalidPartition(String),
    #[error("unrecognized name: {0}")]
    UnknownName(String),
    #[error("invalid composition spec: {0}")]
    CompositionParse(String),
    #[error("cycle length must be at least {min}, got {got}")]
    CycleLength { min: usize, got: usize },
    #[error("gadget precondition failed: {0}")]
    Precondition(String),
    #[error("universe is incomplete: {0}")]
    IncompleteUniverse(String),
    #[error("relation invariant violated: {0}")]
    Invariant(String),
}
