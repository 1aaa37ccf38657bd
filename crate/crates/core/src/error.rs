use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{value} is not a unit modulo {modulus}")]
    NotCoprime { value: i64, modulus: u64 },
    #[error("{divisor} does not divide {modulus}")]
    NotDivisor { divisor: u64, modulus: u64 },
    #[error("congruence system has no solution")]
    NoSolution,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid metacyclic parameters ({m},{n},{s},{t}): {reason}")]
    InvalidParams {
        m: u64,
        n: u64,
        s: u64,
        t: u64,
        reason: String,
    },
    #[error("size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("not a metacyclic factorization: {0}")]
    NotFactorization(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("tuple is not realizable: {0}")]
    NotRealizable(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
