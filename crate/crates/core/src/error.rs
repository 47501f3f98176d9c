use thiserror::Error;

/// Errors raised by the simulation library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A correlation ratio whose mean intensity would be zero.
    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(&'static str),

    /// A requested index range that contains nothing.
    #[error("empty range: {0}")]
    EmptyRange(&'static str),

    /// An argument outside its documented domain.
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
