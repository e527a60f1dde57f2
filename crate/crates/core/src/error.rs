use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A construction's applicability condition does not hold for the input.
    #[error("construction {construction} is not applicable: {reason}")]
    Inapplicable {
        construction: &'static str,
        reason: String,
    },

    /// The requested object is too large to materialize or enumerate.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A value does not fit in the fixed-width type used for vertex labels.
    #[error("overflow: {0}")]
    Overflow(String),

    /// An internal consistency check failed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Stable machine-readable tag, used by the CLI and the C ABI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Inapplicable { .. } => "inapplicable",
            Error::ResourceLimit(_) => "resource_limit",
            Error::Overflow(_) => "overflow",
            Error::Invariant(_) => "invariant",
            Error::Parse(_) => "parse",
        }
    }
}
