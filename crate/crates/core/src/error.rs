use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("unknown algorithm `{0}` (expected de, msde or both)")]
    UnknownAlgorithm(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cannot aggregate an empty set of runs")]
    EmptyRuns,

    #[error("missing {algorithm} results for problem `{problem}`")]
    MissingCell { problem: String, algorithm: String },

    #[error("data table `{name}`: {reason}")]
    Data { name: String, reason: String },

    #[error("malformed results table: {0}")]
    Table(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
