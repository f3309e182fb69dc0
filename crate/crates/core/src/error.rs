use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller supplied something outside an operation's domain.
    #[error("invalid input: {0}")]
    Input(String),
    /// An enumeration or subset count would exceed a configured cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A computed object failed a consistency check.
    #[error("verification failed: {0}")]
    Verification(String),
    /// Malformed serialized data.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! input_err {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}
pub(crate) use input_err;
