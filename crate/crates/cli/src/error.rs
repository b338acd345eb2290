use thiserror::Error;
use vnum_core::Error as CoreError;

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INTERNAL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const PARSE: u8 = 3;
    pub const PRECONDITION: u8 = 4;
    pub const RESOURCE: u8 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io { .. } | CliError::Parse(_) => exit::PARSE,
            CliError::Core(e) => core_exit_code(e),
        }
    }
}

pub fn core_exit_code(e: &CoreError) -> u8 {
    match e {
        CoreError::GraphParse { .. } | CoreError::PolyParse(_) => exit::PARSE,
        CoreError::InvalidEdge(..)
        | CoreError::TooManyVertices { .. }
        | CoreError::VertexOutOfRange { .. }
        | CoreError::Disconnected
        | CoreError::Precondition(_)
        | CoreError::NoTransversal(_)
        | CoreError::NoNewElement => exit::PRECONDITION,
        CoreError::Resource(_) => exit::RESOURCE,
        CoreError::Internal(_) => exit::INTERNAL,
    }
}
