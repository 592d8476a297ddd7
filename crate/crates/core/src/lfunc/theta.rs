use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use super::{stirling1_table, LTable, PeriodicChi};
use crate::arith::{factorial, int, ord_p, rat, QPoly, Rational, Valuation};
use crate::{Error, Result};

/// `(a, b, χ)` defining `P_{a,b,χ}(q) = Σ_{n≥0} n χ(n) q^{(n²−a²)/b}`.
///
/// `scale` is the declared constant `c` with `c · P ∼ F` for a Habiro element
/// `F` sharing the asymptotics (`−1/2` for the Hikami family); it is a
/// declaration to be checked, not an input to any formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaDatum {
    a: i64,
    b: i64,
    chi: PeriodicChi,
    scale: Rational,
}

/// Outcome of scanning `n ≤ bound` for `b | n² − a²` and a non-negative
/// exponent wherever `n χ(n) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityReport {
    pub bound: u64,
    pub checked: u64,
    /// First `n` violating integrality, with `n² − a²`.
    pub violation: Option<(u64, i64)>,
}

impl IntegralityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn theta_integrality_check(a: i64, b: i64, chi: &PeriodicChi, bound: u64) -> IntegralityReport {
    let mut checked = 0;
    for n in 1..=bound {
        if chi.at(n as i64) == 0 {
            continue;
        }
        checked += 1;
        let num = (n as i64) * (n as i64) - a * a;
        if b == 0 || num % b != 0 || num / b < 0 {
            return IntegralityReport {
                bound,
                checked,
                violation: Some((n, num)),
            };
        }
    }
    IntegralityReport {
        bound,
        checked,
        violation: None,
    }
}

impl ThetaDatum {
    /// Validates `P_{a,b,χ} ∈ ℤ[[q]]`. Divisibility only depends on `n` modulo
    /// `lcm(M, |b|)`, so scanning one such period past `a` is a complete check.
    pub fn new(a: i64, b: i64, chi: PeriodicChi) -> Result<Self> {
        if a < 0 {
            return Err(Error::NegativeA(a));
        }
        if b == 0 {
            return Err(Error::ZeroB);
        }
        let bound = (chi.period() as i64).lcm(&b.abs()) as u64 + a as u64;
        let report = theta_integrality_check(a, b, &chi, bound);
        if let Some((n, numerator)) = report.violation {
            return Err(Error::NotIntegral { n, numerator, b });
        }
        Ok(ThetaDatum {
            a,
            b,
            chi,
            scale: Rational::one(),
        })
    }

    pub fn with_scale(mut self, scale: Rational) -> Self {
        self.scale = scale;
        self
    }

    /// `(1, 24, χ₁₂)`, the partial theta function behind the Fishburn numbers.
    pub fn fishburn() -> Self {
        Self::new(1, 24, PeriodicChi::chi12())
            .expect("Fishburn datum is integral")
            .with_scale(rat(-1, 2))
    }

    /// `(2m − 2α − 1, 8(2m + 1), χ_{8m+4}^{(α)})`.
    pub fn hikami(m: usize, alpha: usize) -> Result<Self> {
        let params = crate::habiro::HikamiParams::new(m, alpha)?;
        let (a, b) = params.theta_ab();
        Ok(Self::new(a, b, PeriodicChi::hikami(m, alpha))?.with_scale(rat(-1, 2)))
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn chi(&self) -> &PeriodicChi {
        &self.chi
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn integrality_check(&self, bound: u64) -> IntegralityReport {
        theta_integrality_check(self.a, self.b, &self.chi, bound)
    }

    /// `x² − a²`.
    fn quadratic(&self) -> QPoly {
        QPoly::from_i64(&[-self.a * self.a, 0, 1])
    }
}

/// `H(0), …, H(N−1)` for one datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSequence {
    pub datum: ThetaDatum,
    pub values: Vec<Rational>,
}

impl HSequence {
    /// Fails on the first value whose denominator is divisible by `p`.
    pub fn check_p_integral(&self, p: u64) -> Result<()> {
        for (index, v) in self.values.iter().enumerate() {
            if let Valuation::Finite(valuation) = ord_p(v, p) {
                if valuation < 0 {
                    return Err(Error::NotPIntegral { index, p, valuation });
                }
            }
        }
        Ok(())
    }

    /// Integer values, if every denominator is 1.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }
}

/// `x · binom(Y, n)` with `Y = (x² − a²)/b`, for `n = 0, …, count − 1`.
fn binomial_polys(d: &ThetaDatum, count: usize) -> Vec<QPoly> {
    let y = d.quadratic().scale(&rat(1, d.b));
    let mut out = Vec::with_capacity(count);
    let mut current = QPoly::x();
    for n in 0..count {
        if n > 0 {
            let factor = y.sub(&QPoly::constant(int(n as i64 - 1)));
            current = current.mul(&factor).scale(&rat(1, n as i64));
        }
        out.push(current.clone());
    }
    out
}

fn sign(n: usize) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `H_{a,b,χ}(n) = (−1)ⁿ 𝕃_χ(x · binom((x² − a²)/b, n))`.
pub fn h_coefficient(d: &ThetaDatum, n: usize) -> Rational {
    let poly = binomial_polys(d, n + 1).pop().expect("nonempty");
    debug_assert_eq!(poly.degree(), Some(2 * n + 1));
    sign(n) * LTable::new(&d.chi, 2 * n + 1).apply(&poly)
}

pub fn h_sequence(d: &ThetaDatum, count: usize) -> HSequence {
    let table = LTable::new(&d.chi, (2 * count).max(1));
    let polys = binomial_polys(d, count);
    let values = polys
        .par_iter()
        .enumerate()
        .map(|(n, p)| sign(n) * table.apply(p))
        .collect();
    HSequence {
        datum: d.clone(),
        values,
    }
}

/// `b^{−n} 𝕃_χ(x (x² − a²)ⁿ)` for `n < count`.
fn power_moments(d: &ThetaDatum, table: &LTable, count: usize) -> Vec<Rational> {
    let quad = d.quadratic();
    let mut poly = QPoly::x();
    let mut b_pow = Rational::one();
    let inv_b = rat(1, d.b);
    (0..count)
        .map(|n| {
            if n > 0 {
                poly = poly.mul(&quad);
                b_pow *= &inv_b;
            }
            table.apply(&poly) * &b_pow
        })
        .collect()
}

/// `H` by matching `t`-coefficients of the two asymptotic expansions and
/// inverting the second-kind Stirling transform with first-kind numbers.
pub fn h_via_stirling(d: &ThetaDatum, count: usize) -> HSequence {
    let table = LTable::new(&d.chi, (2 * count).max(1));
    let moments = power_moments(d, &table, count);
    let s1 = stirling1_table(count.saturating_sub(1));
    let values = (0..count)
        .map(|n| {
            let u: Rational = (0..=n)
                .map(|k| &moments[k] * Rational::from_integer(s1[n][k].clone()))
                .sum();
            sign(n) * u / Rational::from_integer(factorial(n as u64))
        })
        .collect();
    HSequence {
        datum: d.clone(),
        values,
    }
}

/// Coefficients of `P(e^{−t}) ∼ Σ α(n) tⁿ`:
/// `α(n) = (−1)ⁿ / (n! bⁿ) · 𝕃_χ(x (x² − a²)ⁿ)`.
pub fn alpha_coefficients(d: &ThetaDatum, count: usize) -> Vec<Rational> {
    let table = LTable::new(&d.chi, (2 * count).max(1));
    power_moments(d, &table, count)
        .into_iter()
        .enumerate()
        .map(|(n, m)| sign(n) * m / Rational::from_integer(factorial(n as u64)))
        .collect()
}
