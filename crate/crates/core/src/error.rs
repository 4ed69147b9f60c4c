use std::fmt;

/// Error type shared by every operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside an operation's domain: zero where a positive
    /// value is required, a mismatched length, an index past a horizon, an
    /// unknown label.
    Input(String),
    /// The request is well-formed but exceeds a documented size limit.
    Capacity(String),
    /// A series operation has no exact rational result, e.g. the square
    /// root of a series whose constant term is not a rational square.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Capacity(msg) => write!(f, "capacity exceeded: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
