use num::BigInt;
use thiserror::Error;

/// Errors surfaced by the arithmetic and sequence layers.
///
/// Anything recoverable lands here; the check runner maps these to SKIP
/// records with a diagnostic instead of aborting a run. Mixing moduli in
/// [`crate::modular::ModNum`] arithmetic is a programming error and panics
/// instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no inverse")]
    ZeroInverse,

    #[error("denominator {denom} is not a unit modulo {modulus}{}", at_power.map(|k| format!(" (coefficient of x^{k})")).unwrap_or_default())]
    NonUnitDenominator {
        denom: BigInt,
        modulus: BigInt,
        at_power: Option<usize>,
    },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("fermat quotient of {a} is undefined: {p} divides {a}")]
    FermatQuotientUndefined { a: BigInt, p: u64 },

    #[error("{context}: {numerator} is not divisible by {divisor}")]
    NonExactDivision {
        context: &'static str,
        numerator: BigInt,
        divisor: BigInt,
    },

    #[error("sequence {0} has no closed integer value at index {1}")]
    OutOfDomain(&'static str, u64),

    #[error("malformed report: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
