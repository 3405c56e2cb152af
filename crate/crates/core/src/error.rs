use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("rotation must be enclosed in parentheses")]
    MissingParens,
    #[error("empty token at index {index}")]
    EmptyToken { index: usize },
    #[error("invalid label {label:?}: labels match [A-Za-z0-9_]+")]
    InvalidLabel { label: String },
    #[error("label {label:?} occurs {count} times, expected 2")]
    Multiplicity { label: String, count: usize },
    #[error("both half-edges of {label:?} are negative")]
    DoubleNegative { label: String },
    #[error("position {position} is used twice")]
    DuplicatePosition { position: usize },
    #[error("positions do not cover 0..{len}")]
    PositionGap { len: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("bouquet has {edges} edges, above the configured cap of {cap}")]
    EdgeCap { edges: usize, cap: usize },
    #[error("unknown edge label {0:?}")]
    UnknownLabel(String),
    #[error("edge subset has width {got}, bouquet has {expected} edges")]
    SubsetWidth { got: usize, expected: usize },
    #[error("label {0:?} occurs in both bouquets")]
    LabelCollision(String),
    #[error("polynomial kinds differ")]
    KindMismatch,
    #[error("bouquet is not orientable")]
    NonOrientable,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("share decomposition is not valid for this bouquet")]
    InvalidDecomposition,
    #[error("mutation orbit exceeded the cap of {cap} states ({visited} visited)")]
    OrbitCap { cap: usize, visited: usize },
    #[error("pendant recursion precondition failed: {0}")]
    Pendant(String),
    #[error("signed graph is not realizable by a bouquet")]
    Unrealizable,
    #[error("graph has {vertices} vertices, above the realization cap of {cap}")]
    RealizeCap { vertices: usize, cap: usize },
    #[error("{what} = {value} is above the cap of {cap}")]
    Cap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
