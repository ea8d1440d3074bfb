use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("unsupported dimension {dim} for {id}: {reason}")]
    UnsupportedDimension { id: String, dim: usize, reason: &'static str },

    #[error("unknown benchmark id `{0}`")]
    UnknownBenchmark(String),

    #[error("unknown algorithm id `{0}`")]
    UnknownAlgorithm(String),

    #[error("invalid bounds at index {index}: lower {lower} must be below upper {upper}")]
    InvalidBounds { index: usize, lower: f64, upper: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("schedule index {t} outside 1..={t_max}")]
    ScheduleRange { t: usize, t_max: usize },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("p-values must be sorted ascending and lie in [0, 1]")]
    UnsortedPValues,

    #[error("unknown control algorithm `{0}`")]
    UnknownControl(String),

    #[error("results matrix: {0}")]
    Matrix(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }

    /// True for errors caused by the environment rather than by the request.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. } | Error::Csv(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
