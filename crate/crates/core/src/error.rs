use thiserror::Error;

/// Errors raised by the group, set, bound and certificate layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("trivial group: {0}")]
    TrivialGroup(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("incompatible groups: {left} and {right}")]
    IncompatibleGroups { left: String, right: String },
    #[error("value out of range: {0}")]
    Range(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("combinatorial budget exceeded: {0}")]
    Budget(String),
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("certificate case routing: {0}")]
    CaseRouting(String),
    #[error("certificate construction failed in case {case}: {detail}")]
    Construction { case: String, detail: String },
    #[error("certificate format: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
