use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("labeling violation: {0}")]
    Labeling(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("not exact: {0}")]
    NotExact(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A mathematical identity that must hold failed; never expected.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by the library.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
