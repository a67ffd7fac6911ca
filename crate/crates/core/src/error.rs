use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop requested at vertex {0}")]
    Loop(usize),
    #[error("{requested} vertices exceed the dense capacity of {}", crate::graph::CAPACITY)]
    CapacityExceeded { requested: usize },
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("corrupt adjacency: {0}")]
    Corrupt(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 alphabet")]
    OutOfAlphabet { byte: u8, offset: usize },
    #[error("graph6 body too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after graph6 body: {extra} extra bytes")]
    TrailingGarbage { extra: usize },
    #[error("non-zero padding bits in the last graph6 byte")]
    NonZeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("spectral radius of a graph with no vertices is undefined")]
    EmptyGraph,
    #[error("power iteration did not converge in {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("family has no equitable quotient: {0}")]
    UnsupportedFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProcedureError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("growth stuck at layer {layer}: no three fresh distinct neighbours")]
    GrowthStuck { layer: usize },
    #[error("no closing vertex adjacent to two ends of the last layer")]
    NoClosingVertex,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("unknown formula {0:?}")]
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("n = {n} exceeds the exhaustive limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid search parameters: {0}")]
    Invalid(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cannot parse family string {0:?}")]
    Parse(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("missing parameter {0:?}")]
    MissingParam(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
