use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge not in graph: {0}")]
    EdgeNotFound(Edge),

    #[error("cannot contract the loop at vertex {0}")]
    ContractLoop(usize),

    #[error("{0} requires a simple graph")]
    NotSimple(&'static str),

    #[error("{0} requires a connected graph")]
    Disconnected(&'static str),

    #[error("graph of order {order} exceeds the bound {bound} for {what}")]
    TooLarge {
        what: &'static str,
        order: usize,
        bound: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("audit contradiction: {0}")]
    AuditContradiction(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
