//! Error type shared by all modules.

use std::fmt;

/// Domain and capacity errors for class computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input was zero where a positive integer is required.
    ZeroInput,
    /// Modulus of a modular exponentiation was below 2.
    ModulusTooSmall(u64),
    /// Input was even where an odd integer is required.
    EvenInput(u64),
    /// Input was below the smallest admissible value (classes need odd n >= 3).
    BelowMinimum(u64),
    /// Input exceeds the supported word width of 2^62.
    WidthExceeded(u64),
    /// A prime argument failed the primality check or was 2.
    NotOddPrime(u64),
    /// The quarter-power class is defined only for primes congruent to 1 mod 8.
    NotOneMod8(u64),
    /// Class exponent k must be at least 1.
    ZeroK,
    /// A hand-built factorization violated an invariant.
    BadFactorization(&'static str),
    /// The Euler group is too large to enumerate in memory.
    GroupTooLarge { n: u64, phi: u64, limit: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroInput => write!(f, "input must be a positive integer"),
            Error::ModulusTooSmall(m) => write!(f, "modulus must be at least 2, got {m}"),
            Error::EvenInput(n) => write!(f, "input must be odd, got {n}"),
            Error::BelowMinimum(n) => write!(f, "input must be at least 3, got {n}"),
            Error::WidthExceeded(n) => write!(f, "input {n} exceeds the supported width 2^62"),
            Error::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::NotOneMod8(p) => write!(f, "prime {p} is not congruent to 1 mod 8"),
            Error::ZeroK => write!(f, "class exponent k must be at least 1"),
            Error::BadFactorization(why) => write!(f, "invalid factorization: {why}"),
            Error::GroupTooLarge { n, phi, limit } => {
                write!(f, "Euler group of {n} has phi = {phi}, above the enumeration limit {limit}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
