use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no such edge {{{0},{1}}}")]
    NoSuchEdge(usize, usize),
    #[error("no such vertex {0}")]
    NoSuchVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("glue precondition violated: {0}")]
    GluePrecondition(String),
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid move at step {step}: {msg}")]
    InvalidMove { step: usize, msg: String },
    #[error("invalid expansion: {0}")]
    InvalidExpansion(String),
    #[error("in-roots do not induce a connected subgraph")]
    RootsDisconnected,
    #[error("strategy is not {0}")]
    BadStrategy(String),
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
