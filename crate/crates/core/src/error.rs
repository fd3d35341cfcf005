//! Error type shared by all modules.

use thiserror::Error;

use crate::weight::Weight;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported type/rank combination: {0}")]
    UnsupportedType(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightRank { expected: usize, got: usize },

    #[error("invalid weight string `{0}`: expected comma-separated integers")]
    WeightParse(String),

    #[error("{0} is not a prime")]
    NotPrime(i64),

    #[error("operation requires p > h, got p = {p}, h = {h}")]
    CoxeterBound { p: i64, h: i64 },

    #[error("weight {0} is p-singular")]
    PSingular(Weight),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("exact division failed: no quotient exists")]
    NotDivisible,

    #[error("character is not W-invariant")]
    NotWInvariant,

    #[error("character is zero")]
    ZeroCharacter,

    #[error("algorithm invariant violated: {0}")]
    Invariant(String),

    #[error("cache format error: {0}")]
    CacheFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
