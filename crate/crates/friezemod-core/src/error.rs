use thiserror::Error;

/// Errors surfaced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be an integer >= 2, got {0}")]
    InvalidModulus(i128),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{value} is not invertible mod {modulus} (gcd = {gcd})")]
    NoInverse { value: u64, modulus: u64, gcd: u64 },
    #[error("expected an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("expected a prime, got {0}")]
    NotPrime(u64),
    #[error("{a} and {p} share a factor")]
    NotCoprime { a: i128, p: u64 },
    #[error("tuple must have at least one entry")]
    EmptyTuple,
    #[error("sum operands need at least two entries, got {0}")]
    OperandTooShort(usize),
    #[error("tuple is not a solution")]
    NotASolution,
    #[error("work limit of {0} candidate tests exceeded")]
    WorkLimitExceeded(u64),
    #[error("{0}")]
    InvalidInput(String),
    #[error("cannot parse {0:?} as a comma-separated integer tuple")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
