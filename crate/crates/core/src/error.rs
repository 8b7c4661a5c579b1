use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size limit exceeded: {what} has size {got}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("cycle type {parts:?} does not partition {n}")]
    InconsistentCycleType { n: usize, parts: Vec<usize> },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
