use thiserror::Error;

use crate::group::FlavorKind;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("flavor mismatch: {left} vs {right}")]
    FlavorMismatch { left: String, right: String },

    #[error("invalid rank {n} for flavor {kind:?}: {reason}")]
    InvalidRank {
        kind: FlavorKind,
        n: usize,
        reason: &'static str,
    },

    #[error("{element} is not an element of {flavor}")]
    NotInGroup { element: String, flavor: String },

    #[error("parse error at position {pos} in {input:?}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },

    #[error("enumeration of {size} elements exceeds cap {cap} (set WEYL_MAX_ENUM to raise it)")]
    CapExceeded { size: u64, cap: u64 },

    #[error("{0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn parse(input: &str, pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            pos,
            msg: msg.into(),
        }
    }

    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
