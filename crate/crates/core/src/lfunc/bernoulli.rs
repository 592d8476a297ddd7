use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::PeriodicChi;
use crate::arith::{binomial, factorial, int, QPoly, Rational};

/// `B_0, …, B_k` from `Σ_{j≤n} C(n+1, j) B_j = 0`, so `B_1 = −1/2`.
pub fn bernoulli_numbers(k: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(k + 1);
    b.push(Rational::one());
    for n in 1..=k {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += bj * Rational::from_integer(binomial(n as u64 + 1, j as u64));
        }
        b.push(-s / int(n as i64 + 1));
    }
    b
}

pub fn bernoulli_number(k: usize) -> Rational {
    bernoulli_numbers(k).pop().expect("nonempty")
}

/// `B_k(x) = Σ_j C(k, j) B_{k−j} xʲ`.
pub fn bernoulli_poly(k: usize) -> QPoly {
    let b = bernoulli_numbers(k);
    QPoly::new(
        (0..=k)
            .map(|j| &b[k - j] * Rational::from_integer(binomial(k as u64, j as u64)))
            .collect(),
    )
}

/// `B_{k,χ} = M^{k−1} Σ_{a=1}^{M} χ(a) B_k(a/M)`.
///
/// Residues are taken in `1..=M`, the range that matches the analytic
/// continuation of `L_χ`; it only differs from `0..M` when `k = 1` and
/// `χ(0) ≠ 0`.
pub fn gen_bernoulli(chi: &PeriodicChi, k: usize) -> Rational {
    let m = chi.period() as i64;
    let poly = bernoulli_poly(k);
    let mut s = Rational::zero();
    for a in 1..=m {
        let c = chi.at(a);
        if c != 0 {
            s += poly.eval(&Rational::new(a.into(), m.into())) * int(c);
        }
    }
    s * pow_rational(&int(m), k as i64 - 1)
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `B_{0,χ}, …, B_{kmax,χ}` read off the truncated generating function
/// `Σ_{a=1}^{M} χ(a) t e^{at} / (e^{Mt} − 1)`, with `t / (e^{Mt} − 1)`
/// obtained by inverting `Σ M^{i+1} tⁱ / (i+1)!` term by term.
pub fn gen_bernoulli_series(chi: &PeriodicChi, kmax: usize) -> Vec<Rational> {
    let m = chi.period() as i64;
    let len = kmax + 1;
    let denom: Vec<Rational> = (0..len)
        .map(|i| Rational::new(BigInt::from(m).pow(i as u32 + 1), factorial(i as u64 + 1)))
        .collect();
    let mut inv = vec![Rational::zero(); len];
    inv[0] = denom[0].recip();
    for n in 1..len {
        let mut s = Rational::zero();
        for j in 1..=n {
            s += &denom[j] * &inv[n - j];
        }
        inv[n] = -s / &denom[0];
    }
    let mut exp_sum = vec![Rational::zero(); len];
    for a in 1..=m {
        let c = chi.at(a);
        if c == 0 {
            continue;
        }
        for (i, slot) in exp_sum.iter_mut().enumerate() {
            *slot += Rational::new(BigInt::from(a).pow(i as u32) * c, factorial(i as u64));
        }
    }
    (0..len)
        .map(|k| {
            let coeff: Rational = (0..=k).map(|i| &exp_sum[i] * &inv[k - i]).sum();
            coeff * Rational::from_integer(factorial(k as u64))
        })
        .collect()
}

/// `L_χ(−n) = −B_{n+1,χ} / (n + 1)`.
pub fn l_value(chi: &PeriodicChi, n: usize) -> Rational {
    -gen_bernoulli(chi, n + 1) / int(n as i64 + 1)
}

/// Precomputed `L_χ(0), L_χ(−1), …, L_χ(−d)`.
///
/// Uses the closed form expanded in power sums,
/// `B_{k,χ} = Σ_j C(k,j) B_j M^{j−1} Σ_{a=1}^{M} χ(a) a^{k−j}`.
#[derive(Clone, Debug)]
pub struct LTable {
    values: Vec<Rational>,
}

impl LTable {
    pub fn new(chi: &PeriodicChi, max_degree: usize) -> Self {
        let m = chi.period() as i64;
        let kmax = max_degree + 1;
        let bern = bernoulli_numbers(kmax);
        let power_sums: Vec<BigInt> = (0..=kmax)
            .map(|i| (1..=m).map(|a| BigInt::from(a).pow(i as u32) * chi.at(a)).sum())
            .collect();
        let mpow: Vec<Rational> = (0..=kmax).map(|j| pow_rational(&int(m), j as i64 - 1)).collect();
        let values = (1..=kmax)
            .map(|k| {
                let mut b = Rational::zero();
                for j in 0..=k {
                    if bern[j].is_zero() || power_sums[k - j].is_zero() {
                        continue;
                    }
                    b +=
                        &bern[j] * &mpow[j] * Rational::from_integer(binomial(k as u64, j as u64) * &power_sums[k - j]);
                }
                -b / int(k as i64)
            })
            .collect();
        LTable { values }
    }

    pub fn max_degree(&self) -> usize {
        self.values.len() - 1
    }

    /// `L_χ(−n)`.
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    /// `𝕃_χ(f) = Σ fₙ L_χ(−n)`.
    pub fn apply(&self, f: &QPoly) -> Rational {
        assert!(
            f.degree().is_none_or(|d| d <= self.max_degree()),
            "polynomial degree exceeds the precomputed L-value table"
        );
        f.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| c * &self.values[n])
            .sum()
    }
}

/// `𝕃_χ(f)`, extended linearly from `𝕃_χ(xⁿ) = L_χ(−n)`.
pub fn l_operator(chi: &PeriodicChi, f: &QPoly) -> Rational {
    match f.degree() {
        None => Rational::zero(),
        Some(d) => LTable::new(chi, d).apply(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ord_p, rat, Valuation};

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_poly(2), QPoly::new(vec![rat(1, 6), int(-1), int(1)]));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn generalized_bernoulli_chi12() {
        let chi = PeriodicChi::chi12();
        assert_eq!(gen_bernoulli(&chi, 0), int(0));
        assert_eq!(gen_bernoulli(&chi, 2), int(4));
        assert_eq!(gen_bernoulli(&chi, 4), int(-184));
        assert_eq!(gen_bernoulli(&chi, 1), int(0));
    }

    #[test]
    fn l_values_chi12() {
        let chi = PeriodicChi::chi12();
        assert_eq!(l_value(&chi, 1), int(-2));
        assert_eq!(l_value(&chi, 0), int(0));
        assert_eq!(l_value(&chi, 3), int(46));
        let table = LTable::new(&chi, 6);
        for n in 0..=6 {
            assert_eq!(table.get(n), &l_value(&chi, n));
        }
    }

    #[test]
    fn operator_examples() {
        let chi = PeriodicChi::chi12();
        assert_eq!(l_operator(&chi, &QPoly::x()), int(-2));
        assert_eq!(l_operator(&chi, &QPoly::zero()), int(0));
        let fermat = QPoly::from_i64(&[-1, 0, 0, 0, 1]);
        assert!(ord_p(&l_operator(&chi, &fermat), 5) >= Valuation::Finite(1));
    }

    #[test]
    fn closed_form_matches_generating_function() {
        let chars = [
            PeriodicChi::chi12(),
            PeriodicChi::hikami(2, 0),
            PeriodicChi::hikami(3, 1),
            PeriodicChi::new(vec![0, 1, -1]).unwrap(),
            PeriodicChi::new(vec![1, 0, 0, -1, 0]).unwrap(),
        ];
        for chi in &chars {
            let series = gen_bernoulli_series(chi, 30);
            let table = LTable::new(chi, 29);
            for (k, expected) in series.iter().enumerate() {
                assert_eq!(&gen_bernoulli(chi, k), expected, "{chi} k={k}");
                if k >= 1 {
                    assert_eq!(table.get(k - 1), &(-expected / int(k as i64)), "{chi} k={k}");
                }
            }
        }
    }

    #[test]
    fn power_sums_approach_bernoulli_p_adically() {
        // (1/(M p^r)) Σ_{a < M p^r} χ(a) a^k → B_{k,χ} in the 5-adic topology
        let chi = PeriodicChi::chi12();
        let m = chi.period() as i64;
        for k in 1..=6usize {
            let target = gen_bernoulli(&chi, k);
            let mut last = Valuation::Finite(i64::MIN);
            for r in 1..=3u32 {
                let n = m * 5i64.pow(r);
                let s: BigInt = (0..n).map(|a| BigInt::from(a).pow(k as u32) * chi.at(a)).sum();
                let approx = Rational::new(s, BigInt::from(n));
                let v = ord_p(&(approx - &target), 5);
                assert!(v >= last, "k={k} r={r}: {v} < {last}");
                last = v;
            }
        }
    }
}
