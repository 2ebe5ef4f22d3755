use thiserror::Error;

/// Errors raised by the numeric routines and the zero-table loader.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument sits on (or within tolerance of) a pole.
    #[error("singularity: {0}")]
    Singularity(String),

    /// A sieve bound above the configured cap.
    #[error("resource limit: sieve bound {requested} exceeds cap {cap}")]
    Resource { requested: f64, cap: u64 },

    /// More zeros requested than the table holds.
    #[error("range error: {requested} zeros requested, table holds {available}")]
    Range { requested: usize, available: usize },

    #[error("zeros file line {line}: cannot parse {text:?}")]
    Format { line: usize, text: String },

    #[error("zeros file line {line}: {reason}")]
    Validation { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
