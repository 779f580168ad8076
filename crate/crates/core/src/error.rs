use thiserror::Error;

use crate::root_data::Kind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for diagram kind {kind}: {reason}")]
    InvalidRank {
        kind: Kind,
        rank: usize,
        reason: &'static str,
    },

    #[error("unknown diagram kind {0:?}")]
    UnknownKind(String),

    #[error("root index {0} is not the sum of a special pair (simple root or out of range)")]
    NotASumKey(usize),

    #[error("roots {0} and {1} do not sum to a root")]
    NotSummable(usize, usize),

    #[error("structure constant for ({r}, {s}) evaluated to non-integral value {value}")]
    NonIntegral { r: usize, s: usize, value: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    /// `[e_a, e_{-a}] = h_a`: the pair is opposite, there is no structure constant.
    #[error("roots are opposite (index {0}): the bracket is the Cartan element h_a")]
    CartanBracket(usize),

    #[error("matrix import: {0}")]
    Import(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
