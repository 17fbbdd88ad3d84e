use thiserror::Error;

/// Errors surfaced by the library and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(
        "unknown or unsupported algebra `{0}` (expected A<r>, D<r> with r >= 4, E6, E7 or E8)"
    )]
    UnknownAlgebra(String),

    #[error("lattice vector has {got} coordinates, the root system has rank {rank}")]
    RankMismatch { rank: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("state at loop level {level} exceeds the cutoff {cutoff}")]
    AboveCutoff { level: i64, cutoff: i64 },

    #[error("direction index {index} out of range for rank {rank}")]
    DirectionOutOfRange { index: usize, rank: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("linear system has no solution: {0}")]
    Singular(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
