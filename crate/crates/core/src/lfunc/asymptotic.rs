//! Numerical probe of `P(e^{−t}) ∼ Σ α(n) tⁿ`.
//!
//! The only inexact computation in the crate. Reals are fixed-point integers
//! scaled by `10^W` (`W` = requested digits plus guard digits); every
//! truncation is charged one unit in the last place to a running error bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{alpha_coefficients, ThetaDatum};
use crate::arith::Rational;
use crate::{Error, Result};

const GUARD_DIGITS: u32 = 20;
/// A residual is only reported once it exceeds the error bound by this factor.
const RESOLUTION_FACTOR: u32 = 1000;

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    Resolved {
        value: Rational,
        error_bound: Rational,
        /// Largest `n` summed before the tail was cut.
        cut_at: u64,
    },
    Indeterminate {
        error_bound: Rational,
        cut_at: u64,
    },
}

impl Residual {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Residual::Resolved { value, .. } => Some(value),
            Residual::Indeterminate { .. } => None,
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.value().and_then(|v| v.to_f64())
    }
}

struct Fixed {
    scale: BigInt,
}

impl Fixed {
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        (x * y).div_floor(&self.scale)
    }

    /// `e^{−t}` by its Taylor series; returns value and error in ulps.
    fn exp_neg(&self, t: &Rational) -> (BigInt, BigInt) {
        let (tn, td) = (t.numer().clone(), t.denom().clone());
        let mut term = self.scale.clone();
        let mut sum = term.clone();
        let mut k = 1u64;
        loop {
            term = -(term * &tn) / (&td * k);
            if term.is_zero() {
                break;
            }
            sum += &term;
            k += 1;
        }
        (sum, BigInt::from(k + 1))
    }

    /// `x^e` for `0 ≤ x ≤ 1` with input error `err` ulps.
    fn pow(&self, x: &BigInt, err: &BigInt, e: u64) -> (BigInt, BigInt) {
        let mut result = self.scale.clone();
        let mut base = x.clone();
        let mut n = e;
        let mut mults = 0u64;
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &base);
                mults += 1;
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
                mults += 1;
            }
        }
        (result, err * e + mults)
    }
}

/// `|P(e^{−t}) − Σ_{n<N} α(n) tⁿ|` to roughly `precision` decimal digits.
pub fn asymptotic_residual(d: &ThetaDatum, t: &Rational, terms: usize, precision: u32) -> Result<Residual> {
    if !t.is_positive() || *t > Rational::new(1.into(), 10.into()) {
        return Err(Error::AsymptoticDomain { what: "0 < t <= 1/10" });
    }
    if precision < 30 {
        return Err(Error::AsymptoticDomain {
            what: "at least 30 digits of precision",
        });
    }
    let digits = precision + GUARD_DIGITS;
    let fx = Fixed {
        scale: BigInt::from(10).pow(digits),
    };
    let (q, q_err) = fx.exp_neg(t);

    let (a, b) = (d.a(), d.b());
    let chi = d.chi();
    let t_f = t.to_f64().expect("t is a small rational");
    let ln_cut = -(precision as f64) * std::f64::consts::LN_10;
    let ln_chi = (chi.max_abs().max(1) as f64).ln();

    let mut sum = BigInt::zero();
    let mut err = BigInt::zero();
    let mut exponent = 0u64;
    let mut power = fx.scale.clone();
    let mut power_err = BigInt::zero();
    let mut n = 1u64;
    loop {
        let c = chi.at(n as i64);
        if c != 0 {
            // integral and non-negative by construction of the datum
            let e = ((n as i64 * n as i64 - a * a) / b) as u64;
            let (step, step_err) = fx.pow(&q, &q_err, e - exponent);
            power = fx.mul(&power, &step);
            power_err = &power_err + step_err + 1u32;
            exponent = e;
            sum += &power * (n as i64 * c);
            err += &power_err * (n as i64 * c).abs();
        }
        // Tail over all x > n: term ratio (1 + 1/x) e^{−t(2x+1)/b} decreases in x.
        let x = (n + 1) as f64;
        if x * x > (a * a) as f64 {
            let ratio = (1.0 + 1.0 / x) * (-t_f * (2.0 * x + 1.0) / b as f64).exp();
            let ln_term = x.ln() + ln_chi - t_f * (x * x - (a * a) as f64) / b as f64;
            if ratio < 0.5 && ln_term + std::f64::consts::LN_2 < ln_cut {
                break;
            }
        }
        n += 1;
    }
    // tail < 10^{−precision} = 10^{GUARD} ulps
    err += BigInt::from(10).pow(GUARD_DIGITS);

    let alpha = alpha_coefficients(d, terms);
    let mut series = Rational::zero();
    let mut t_pow = Rational::one();
    for coeff in &alpha {
        series += coeff * &t_pow;
        t_pow *= t;
    }
    let series_fixed = (series * Rational::from_integer(fx.scale.clone())).floor().to_integer();
    err += 1u32;

    let residual = (sum - series_fixed).abs();
    let scale = Rational::from_integer(fx.scale.clone());
    let error_bound = Rational::from_integer(err.clone()) / &scale;
    if residual <= err * RESOLUTION_FACTOR {
        return Ok(Residual::Indeterminate { error_bound, cut_at: n });
    }
    Ok(Residual::Resolved {
        value: Rational::from_integer(residual) / scale,
        error_bound,
        cut_at: n,
    })
}
