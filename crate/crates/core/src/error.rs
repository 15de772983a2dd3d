use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown vertex, non-matching, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Fewer disjoint paths exist than were requested.
    #[error("only {found} disjoint X-Y paths exist but {required} were requested")]
    NotEnoughPaths {
        found: usize,
        required: usize,
        separator: Vec<Vertex>,
    },

    /// An assertion that a theorem guarantees has failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// An exhaustive search exceeded its configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }
}
