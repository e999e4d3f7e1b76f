use thiserror::Error;

/// Errors raised across the toolkit. Checks that merely *fail* are reported
/// through verdict types, not through this enum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole: denominator vanishes at {0}")]
    Pole(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),
    #[error("field size {0} exceeds the supported bound")]
    FieldTooLarge(u128),
    #[error("q = {q} exceeds the exhaustive enumeration cap {cap}")]
    EnumerationCap { q: u64, cap: u64 },
    #[error("integer {0} is outside the supported primality range")]
    PrimalityRange(String),
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: &'static str },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("insufficient good primes: found {found} below {bound}, wanted {wanted}")]
    InsufficientPrimes { found: usize, wanted: usize, bound: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("singular curve: 4a^3 + 27b^2 = 0")]
    Singular,
    #[error("precision of {bits} bits cannot certify the error bound")]
    PrecisionTooLow { bits: u32 },
    #[error("multiplier ring has conductor outside {{1, 2}}")]
    UnsupportedConductor,
    #[error("group too large: {0} elements")]
    GroupTooLarge(usize),
    #[error("malformed group descriptor: {0}")]
    MalformedDescriptor(String),
    #[error("matrix dimension {0} exceeds cap")]
    DimensionCap(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
