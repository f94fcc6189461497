use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices (pair {u}-{v})")]
    IndexOutOfRange {
        u: usize,
        v: usize,
        vertex: usize,
        n: usize,
    },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0} is empty, no transversal exists")]
    EmptyEdge(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("instance size {size} exceeds the limit {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("trivial instance: independent side has {0} vertices")]
    TrivialInstance(usize),

    #[error("decode failure: {0}")]
    DecodeFailure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolation(msg.into())
}
