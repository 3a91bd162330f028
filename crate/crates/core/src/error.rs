use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{x} is not invertible modulo {m}")]
    NonInvertible { x: i64, m: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("need k > l >= 1, got k = {k}, l = {l}")]
    InvalidPair { k: u64, l: u64 },
    #[error("modulus {n} exceeds the supported maximum {max}")]
    ModulusTooLarge { n: u64, max: u64 },
    #[error("residue {x} out of range for modulus {n}")]
    ResidueOutOfRange { x: u64, n: u64 },
    #[error("invalid arithmetic progression: {0}")]
    InvalidProgression(String),
    #[error("invalid invariant factors: {0}")]
    InvalidGroup(String),
    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },
    #[error("moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("h must be positive")]
    ZeroFold,
    #[error("set is not ({k},{l})-sum-free")]
    NotSumFree { k: u64, l: u64 },
    #[error("no nonempty witness: mu = 0 for n = {n}, k = {k}, l = {l}")]
    NoWitness { n: u64, k: u64, l: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("instance too large for the oracle: {0}")]
    InstanceTooLarge(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
