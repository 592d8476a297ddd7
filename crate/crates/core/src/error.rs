use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("prime {p} divides b = {b}")]
    PrimeDividesB { p: u64, b: i64 },

    #[error("character values sum to {sum} over one period, expected 0")]
    NonzeroMean { sum: i64 },

    #[error("character period must be positive")]
    EmptyPeriod,

    #[error("character value {value} at residue {residue} is outside {{-1, 0, 1}}")]
    NonTernaryValue { residue: usize, value: i64 },

    #[error("b must be nonzero")]
    ZeroB,

    #[error("a must be non-negative, got {0}")]
    NegativeA(i64),

    #[error("P_(a,b,chi) is not integral: n = {n} gives exponent (n^2 - a^2)/b = {numerator}/{b}")]
    NotIntegral { n: u64, numerator: i64, b: i64 },

    #[error("inadmissible Hikami parameters m = {m}, alpha = {alpha}")]
    InadmissibleHikami { m: usize, alpha: usize },

    #[error("k = {k} exceeds n = {n}")]
    BinomialRange { n: u64, k: u64 },

    #[error("sequence has {have} terms but {need} are required")]
    SequenceTooShort { need: usize, have: usize },

    #[error("value at index {index} is not {p}-integral (valuation {valuation})")]
    NotPIntegral { index: usize, p: u64, valuation: i64 },

    #[error("truncation order must be at least 1")]
    ZeroOrder,

    #[error("asymptotic probe requires {what}")]
    AsymptoticDomain { what: &'static str },
}
