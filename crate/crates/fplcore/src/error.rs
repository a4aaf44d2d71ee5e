//! Error type shared across the library.

use alloc::string::String;
use core::fmt;

/// Errors reported by constructors, parsers, and size guards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input is malformed or violates a structural invariant.
    Invalid(String),
    /// A hard size guard was exceeded (exhaustive enumeration would be unreasonable).
    TooLarge(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::TooLarge(msg) => write!(f, "size guard exceeded: {msg}"),
        }
    }
}
