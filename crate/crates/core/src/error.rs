use thiserror::Error;

use crate::inverse::AfCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("series known only modulo t^{}, need coefficient of t^{needed}", .available + 1)]
    InsufficientPrecision { needed: usize, available: usize },

    #[error("divisor has zero constant term")]
    NonUnitDivisor,

    #[error("substituted series must have zero constant term")]
    NonzeroConstantSubstitution,

    #[error("series is not a uniformizer (order {order:?}, need 1)")]
    NotUniformizer { order: Option<usize> },

    #[error("value semigroup has gcd {gcd}: the algebra has infinite codimension")]
    InfiniteCodimension { gcd: usize },

    #[error("precision exhausted at t^{used}; at least t^{needed} is required")]
    PrecisionExhausted { used: usize, needed: usize },

    #[error("not algebra-forming")]
    NotAlgebraForming(Box<AfCertificate>),

    #[error("operator {index} in V has a nonzero constant term")]
    ConstantTermInV { index: usize },

    #[error("generators have gcd {gcd}")]
    NonCoprime { gcd: usize },

    #[error("invalid characteristic: {0}")]
    InvalidCharacteristic(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("expression mixes the variables t and u")]
    MixedVariables,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inclusion check failed: {0}")]
    NotContained(String),

    #[error("codimension is {found}, expected 1")]
    CodimensionNotOne { found: i64 },

    #[error("algebra is already smooth; nothing to blow up")]
    NothingToBlowUp,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
