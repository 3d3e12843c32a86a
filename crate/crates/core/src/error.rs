use thiserror::Error;

/// Errors produced by game construction, index computation and the search pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("dimension mismatch: expected {expected} voters, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a simple game: {0}")]
    NotSimple(String),
    #[error("invalid weighted representation: {0}")]
    InvalidWeights(String),
    #[error("game is not complete")]
    NotComplete,
    #[error("voter count {n} outside supported range {min}..={max}")]
    VoterCount { n: usize, min: usize, max: usize },
    #[error("dynamic programming needs {states} states, cap is {cap}")]
    StateCap { states: u128, cap: u128 },
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("index kinds differ")]
    KindMismatch,
    #[error("vector store is empty")]
    EmptyStore,
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("corrupt cache: {0}")]
    CorruptCache(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
