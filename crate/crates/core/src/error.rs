use thiserror::Error;

use crate::ring::ElementIndex;

/// Errors produced by ring construction, localization and the I/O layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },

    #[error("invalid ring tables: {reason} (witness {witness:?})")]
    InvalidTables {
        reason: String,
        witness: Vec<ElementIndex>,
    },

    #[error("invalid ring expression: {0}")]
    InvalidExpression(String),

    #[error("unknown catalog ring `{0}`")]
    UnknownCatalogName(String),

    #[error("more than {bound} ideals")]
    IdealBoundExceeded { bound: usize },

    #[error("ideal contains the identity")]
    ImproperIdeal,

    #[error("zero lies in the multiplicative closure (product chain {chain:?})")]
    ZeroAbsorbed { chain: Vec<ElementIndex> },

    #[error("set is not multiplicative: {0}")]
    NotMultiplicative(String),

    #[error("not a left Ore set: S r ∩ R s is empty for r = {r}, s = {s}")]
    NotOre { r: ElementIndex, s: ElementIndex },

    #[error("not a left denominator set: {0}")]
    NotDenominator(String),

    #[error("oracle input too large: {size} exceeds {bound}")]
    OracleBoundExceeded { size: usize, bound: usize },

    #[error("ass(S) is not contained in ass(T)")]
    PrecondAssNotNested,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("parse error at offset {offset}: expected one of {expected:?}")]
    Parse {
        offset: usize,
        expected: Vec<String>,
    },

    #[error("format error on line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    /// True for the bound-type errors (order, ideal count, oracle size).
    pub fn is_bound(&self) -> bool {
        matches!(
            self,
            Error::OrderBoundExceeded { .. }
                | Error::IdealBoundExceeded { .. }
                | Error::OracleBoundExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
