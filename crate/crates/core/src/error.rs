use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the region where the operation is defined.
    #[error("{op}: domain error: {constraint}")]
    Domain { op: &'static str, constraint: String },

    /// The argument hits (or lies within the guard radius of) a pole.
    #[error("{op}: pole at {at}")]
    Pole { op: &'static str, at: String },

    #[error("series did not reach the requested accuracy within {max_terms} terms")]
    NonConvergence { max_terms: u64 },

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn domain(op: &'static str, constraint: impl Into<String>) -> Self {
        Error::Domain {
            op,
            constraint: constraint.into(),
        }
    }

    pub(crate) fn pole(op: &'static str, at: impl std::fmt::Display) -> Self {
        Error::Pole {
            op,
            at: at.to_string(),
        }
    }
}
