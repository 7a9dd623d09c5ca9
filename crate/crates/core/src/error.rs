use thiserror::Error;

/// Errors from graph construction, parsing, and metric computation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("graph order {0} exceeds the supported maximum of 62")]
    OrderTooLarge(usize),
    #[error("graph is disconnected: vertex {to} is unreachable from vertex {from}")]
    Disconnected { from: usize, to: usize },
    #[error("edge-list parse error: {0}")]
    EdgeList(String),
}

/// Errors from the graph6 codec.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("invalid graph6 byte 0x{byte:02x} at column {column}")]
    InvalidByte { column: usize, byte: u8 },
    #[error("graph6 order {0} exceeds the supported maximum of 62")]
    OrderTooLarge(usize),
    #[error("graph6 encodes an empty vertex set")]
    ZeroOrder,
    #[error("graph6 line truncated: need {expected} data characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 encoding: need {expected} data characters, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("nonzero padding bits at end of graph6 encoding")]
    NonzeroPadding,
}

/// Errors from family constructors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family requires odd order, got {0}")]
    EvenOrder(usize),
    #[error("family requires order at least {min}, got {got}")]
    OrderTooSmall { got: usize, min: usize },
    #[error("invalid theta parameters n={n} p={p} q={q}: {reason}")]
    InvalidTheta {
        n: usize,
        p: usize,
        q: usize,
        reason: &'static str,
    },
}

/// Errors from census generation and stream filtering.
#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("census order must be odd and at least 3, got {0}")]
    InvalidOrder(usize),
    #[error("order {n} is above the internal-generation cap {cap}; use a graph6 stream instead")]
    AboveCap { n: usize, cap: usize },
    #[error("graph6 stream line {line}: {source}")]
    Stream { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
