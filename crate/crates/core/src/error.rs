use thiserror::Error;

use crate::partition::PartitionPair;

/// Errors raised by the arithmetic, combinatorial and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dilation factor must be at least 1")]
    ZeroDilation,

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term must be 1 to invert")]
    NotInvertible,

    #[error("coefficient z^{index} requested from a series truncated at order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },

    #[error("second component {0} has a repeated part")]
    NotDistinct(String),

    #[error("part {part} has odd multiplicity {multiplicity}")]
    OddMultiplicity { part: usize, multiplicity: usize },

    #[error("theta is undefined on the fixed set: {0}")]
    FixedPoint(PartitionPair),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("{identity} is undefined at {point}: {reason}")]
    OutOfDomain {
        identity: &'static str,
        point: String,
        reason: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
