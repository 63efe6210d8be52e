use thiserror::Error;

/// Errors raised by the semigroup engine and the truncated oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),

    #[error("generators have gcd {gcd}, the complement would be infinite")]
    GcdNotOne { gcd: i64 },

    #[error("set is not closed under addition: {0}")]
    NotClosed(String),

    #[error("ideals live over different semigroups")]
    MixedSemigroups,

    #[error("ideal is not contained in the ring")]
    NotIntegral,

    #[error("{0} is not a member")]
    NotMember(i64),

    #[error("conductor {conductor} exceeds the census bound {bound}")]
    BoundExceeded { conductor: i64, bound: i64 },

    #[error("{0} does not lie in the ideal")]
    NotInIdeal(String),

    #[error("generator {0} does not lie in the algebra")]
    NotInAlgebra(String),

    #[error("precision too low: need {required}, have {actual}")]
    PrecisionTooLow { required: usize, actual: usize },

    #[error("element does not have the minimal valuation {expected} of the ideal")]
    NotMinimalValuation { expected: usize },

    #[error("saturation check failed: {0}")]
    SaturationCheckFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for the failures that a larger working precision may cure.
    pub fn is_precision_failure(&self) -> bool {
        matches!(
            self,
            Error::PrecisionTooLow { .. } | Error::SaturationCheckFailed(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
