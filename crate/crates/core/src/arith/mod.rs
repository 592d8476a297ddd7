//! Exact arithmetic kernel: rationals, dense polynomials, truncated q-series,
//! q-Pochhammer symbols, Gaussian binomials and p-adic helpers.

mod padic;
mod poly;
mod qseries;
mod series;

pub(crate) mod qseries_internal {
    pub(crate) use super::qseries::one_minus_shifted_power;
}

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use padic::{base_p_digits, is_prime, legendre, ord_p, ord_p_int, primes_up_to, Valuation};
pub use poly::Poly;
pub use qseries::{compose_one_minus_q, mul_one_minus_q_pow, pochhammer_one_minus, qbinomial, qpochhammer};
pub use series::TruncSeries;

/// Exact rational in lowest terms with positive denominator.
pub type Rational = BigRational;

pub type QPoly = Poly<Rational>;
pub type ZPoly = Poly<BigInt>;
pub type QSeries = TruncSeries<Rational>;
pub type ZSeries = TruncSeries<BigInt>;

/// Coefficient ring for [`Poly`] and [`TruncSeries`].
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)` as an exact integer (zero outside `0 ≤ k ≤ n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}
