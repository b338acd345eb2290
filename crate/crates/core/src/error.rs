use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which resource guard tripped during a Gröbner computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResourceKind {
    Polynomials,
    Degree,
    Time,
    DegreeSearch,
}

impl fmt::Display for ResourceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResourceKind::Polynomials => "basis size cap",
            ResourceKind::Degree => "degree cap",
            ResourceKind::Time => "time budget",
            ResourceKind::DegreeSearch => "oracle degree cap",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    #[error("invalid edge {{{0},{1}}}: {2}")]
    InvalidEdge(usize, usize, &'static str),
    #[error("graph text, line {line}: {msg}")]
    GraphParse { line: usize, msg: String },
    #[error("polynomial text: {0}")]
    PolyParse(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("family member {0} is empty, no transversal exists")]
    NoTransversal(usize),
    #[error("the two ideals agree, there is no new element")]
    NoNewElement,
    #[error("resource exhausted: {0}")]
    Resource(ResourceKind),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
