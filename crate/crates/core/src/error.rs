use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("beta = {0} gives an infinite cyclic group with trivial torsion")]
    DegenerateBeta(BigInt),
    #[error("beta = 1 (integral Heisenberg group) is not supported")]
    UnsupportedBeta,
    #[error("element {0} is not a canonical element of G({1})")]
    ParamsMismatch(String, BigInt),
    #[error("cannot factor {0}: a cofactor exceeds the trial-division bound")]
    FactorizationLimit(BigInt),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("enumeration needs {required} elements, cap is {cap}")]
    CapExceeded { required: BigInt, cap: u64 },
    #[error("element {0} has infinite order")]
    NotTorsion(String),
    #[error("{p} does not divide {n}")]
    PrimeNotDividing { p: BigInt, n: BigInt },
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("beta = {0} is odd; this construction needs beta even")]
    BetaNotEven(BigInt),
    #[error("gcd(beta - 1, 6) = {gcd} for beta = {beta}; L(beta) needs gcd 1")]
    GcdCondition { beta: BigInt, gcd: BigInt },
    #[error("{i} is not a unit modulo {n}")]
    NotAUnit { i: BigInt, n: BigInt },
}

pub type Result<T> = std::result::Result<T, Error>;
