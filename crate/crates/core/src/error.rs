use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("indeterminate expansion: division by zero while nesting [{0}]")]
    IndeterminateExpansion(String),
    #[error("knot input: {0}")]
    KnotInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("path not found within bound: {0}")]
    PathNotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::IndeterminateExpansion(_) => "indeterminate_expansion",
            Error::KnotInput(_) => "knot_input",
            Error::Precondition(_) => "precondition",
            Error::Internal(_) => "internal",
            Error::PathNotFound(_) => "path_not_found",
            Error::Parse(_) => "usage",
        }
    }

    /// Process exit status: 1 usage, 2 domain, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::Domain(_)
            | Error::IndeterminateExpansion(_)
            | Error::KnotInput(_)
            | Error::Precondition(_) => 2,
            Error::Internal(_) | Error::PathNotFound(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
