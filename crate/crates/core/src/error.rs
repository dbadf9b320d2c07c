//! Error type shared by every module of the crate.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Input and domain errors. Every fallible operation in this crate returns
/// one of these; panics are reserved for internal invariant violations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vertex index is not in `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// An edge `(v, v)` was supplied; only simple graphs are accepted.
    SelfLoop { v: usize },
    /// An operation required a nonempty vertex set.
    EmptySet,
    /// A probability outside `[0, 1]`.
    InvalidProbability { p: f64 },
    /// A size guard was exceeded (exhaustive enumerations, naive solver).
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// A real-valued argument fell outside the domain of an analytic function.
    Domain(String),
    /// Malformed graph6 or edge-list input. `offset` is the byte offset for
    /// graph6 and the line number for edge lists.
    Parse { offset: usize, message: String },
    /// Anything else the caller got wrong.
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for graph on {n} vertices")
            }
            Error::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            Error::EmptySet => write!(f, "vertex set must be nonempty"),
            Error::InvalidProbability { p } => write!(f, "probability {p} outside [0, 1]"),
            Error::TooLarge { what, limit, got } => {
                write!(f, "{what} supports at most {limit}, got {got}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parse { offset, message } => write!(f, "parse error at {offset}: {message}"),
            Error::InvalidInput(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}
