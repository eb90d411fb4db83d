use thiserror::Error;

/// Errors raised by the shuffle library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("{value} is not a unit modulo {modulus}")]
    NotCoprime { value: u64, modulus: u64 },

    #[error("length {len} is not valid for {kind}")]
    InvalidLength { len: usize, kind: String },

    #[error("position {pos} is outside 1..={order}")]
    PositionOutOfRange { pos: usize, order: usize },

    #[error("range {lo}..{hi} (distance {dist}) is invalid for a buffer of {len} elements")]
    InvalidRange {
        lo: usize,
        hi: usize,
        dist: usize,
        len: usize,
    },

    #[error("k = {0} is outside the supported range 2..=9")]
    UnsupportedK(usize),

    #[error("no base prime found for k = {0}")]
    NoBaseFound(usize),

    #[error("sequences have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
