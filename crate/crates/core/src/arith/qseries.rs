//! q-Pochhammer symbols, Gaussian binomials and the substitution `q ↦ 1 − q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Poly, Ring, TruncSeries, ZPoly, ZSeries};

/// `(q;q)_n = ∏_{j=1}^{n} (1 − q^j)` modulo `q^order`.
pub fn qpochhammer(n: usize, order: usize) -> ZSeries {
    let mut s = ZSeries::one(order);
    for j in 1..=n.min(order.saturating_sub(1)) {
        // multiply by (1 - q^j) in place, high indices first
        let c = s.coeffs_mut();
        for i in (j..order).rev() {
            let (lo, hi) = c.split_at_mut(i);
            hi[0] -= &lo[i - j];
        }
    }
    s
}

/// Exact `(q;q)_n` as a polynomial of degree `n(n+1)/2`.
fn qpochhammer_poly(n: usize) -> ZPoly {
    let deg = n * (n + 1) / 2;
    ZPoly::new(qpochhammer(n, deg + 1).into_coeffs())
}

/// Gaussian binomial `[n over k]_q`; the zero polynomial unless `0 ≤ k ≤ n`.
///
/// Computed as an exact quotient `(q;q)_n / ((q;q)_k (q;q)_{n-k})`; a nonzero
/// remainder would be an arithmetic bug and panics.
pub fn qbinomial(n: i64, k: i64) -> ZPoly {
    if k < 0 || n < 0 || k > n {
        return ZPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let num = qpochhammer_poly(n);
    let den = qpochhammer_poly(k).mul(&qpochhammer_poly(n - k));
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "q-binomial [{n} over {k}] left a remainder");
    quot
}

/// Multiply `s` in place by `(1 − q)^e`, keeping its order.
pub fn mul_one_minus_q_pow<T: Ring>(s: &mut TruncSeries<T>, e: u64) {
    let order = s.order();
    if order == 0 || e == 0 {
        return;
    }
    let c = s.coeffs_mut();
    if e <= 2 * order as u64 {
        for _ in 0..e {
            for i in (1..order).rev() {
                let (lo, hi) = c.split_at_mut(i);
                hi[0] = std::mem::replace(&mut hi[0], T::zero()) - &lo[i - 1];
            }
        }
        return;
    }
    // convolution with the signed binomial row of (1 - q)^e
    let mut row = Vec::with_capacity(order);
    let mut b = BigInt::one();
    for i in 0..order as u64 {
        let signed = if i % 2 == 0 { b.clone() } else { -b.clone() };
        row.push(T::from_bigint(&signed));
        b = b * (e - i) / (i + 1);
    }
    for i in (0..order).rev() {
        let mut acc = T::zero();
        for (j, r) in row.iter().enumerate().take(i + 1) {
            acc = acc + &(c[i - j].clone() * r);
        }
        c[i] = acc;
    }
}

/// `p(1 − q)` modulo `q^order`.
pub fn compose_one_minus_q<T: Ring>(p: &Poly<T>, order: usize) -> TruncSeries<T> {
    let mut acc = TruncSeries::<T>::zero(order);
    if order == 0 {
        return acc;
    }
    for c in p.coeffs().iter().rev() {
        mul_one_minus_q_pow(&mut acc, 1);
        let c0 = &mut acc.coeffs_mut()[0];
        *c0 = std::mem::replace(c0, T::zero()) + c;
    }
    acc
}

/// Coefficients of `1 − (1 − q)^j`, i.e. `(1 − q^j)` after `q ↦ 1 − q`,
/// modulo `q^order`.
pub(crate) fn one_minus_shifted_power(j: u64, order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order];
    let mut b = BigInt::one();
    for i in 1..order as u64 {
        if i > j {
            break;
        }
        b = b * (j - i + 1) / i;
        out[i as usize] = if i % 2 == 1 { b.clone() } else { -b.clone() };
    }
    out
}

/// `(1−q; 1−q)_n = ∏_{j=1}^{n} (1 − (1−q)^j)` modulo `q^order`.
///
/// Each factor is `jq + O(q²)`, so the result has valuation `n` with leading
/// coefficient `n!`; it is the zero series once `n ≥ order`.
pub fn pochhammer_one_minus(n: usize, order: usize) -> ZSeries {
    if n >= order {
        return ZSeries::zero(order);
    }
    let mut acc = ZSeries::one(order);
    for j in 1..=n as u64 {
        let f = ZSeries::new(one_minus_shifted_power(j, order));
        acc = acc.mul(&f);
    }
    acc
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::arith::{binomial, factorial, QPoly, QSeries};

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Brute expansion through the exact polynomial ring.
    fn brute_pochhammer(n: usize) -> ZPoly {
        (1..=n).fold(ZPoly::one(), |acc, j| {
            acc.mul(&ZPoly::one().sub(&ZPoly::monomial(1.into(), j)))
        })
    }

    #[test]
    fn qpochhammer_examples() {
        assert_eq!(qpochhammer(0, 4).coeffs(), z(&[1, 0, 0, 0]).as_slice());
        assert_eq!(qpochhammer(2, 4).coeffs(), z(&[1, -1, -1, 1]).as_slice());
        let brute = brute_pochhammer(3);
        assert_eq!(qpochhammer(3, 4), ZSeries::from_poly(&brute, 4));
        assert_eq!(qpochhammer(3, 4).coeffs(), z(&[1, -1, -1, 0]).as_slice());
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(2, 1), ZPoly::from_i64(&[1, 1]));
        assert!(qbinomial(1, 2).is_zero());
        assert!(qbinomial(3, -1).is_zero());
        assert_eq!(qbinomial(4, 2), ZPoly::from_i64(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinomial(5, 0), ZPoly::one());
    }

    #[test]
    fn qbinomial_at_one_is_binomial() {
        for n in 0..=20i64 {
            for k in 0..=n {
                let value = qbinomial(n, k).eval(&BigInt::one());
                assert_eq!(value, binomial(n as u64, k as u64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn compose_examples() {
        let sq = ZPoly::monomial(1.into(), 2);
        assert_eq!(compose_one_minus_q(&sq, 4).coeffs(), z(&[1, -2, 1, 0]).as_slice());
        assert_eq!(compose_one_minus_q(&ZPoly::one(), 3).coeffs(), z(&[1, 0, 0]).as_slice());
        let p = ZPoly::from_i64(&[0, 1, 0, 1]);
        // (1-q)^3 + (1-q) = 2 - 4q + 3q^2 - q^3
        assert_eq!(compose_one_minus_q(&p, 5).coeffs(), z(&[2, -4, 3, -1, 0]).as_slice());
    }

    #[test]
    fn pochhammer_one_minus_examples() {
        assert_eq!(pochhammer_one_minus(0, 3).coeffs(), z(&[1, 0, 0]).as_slice());
        assert_eq!(pochhammer_one_minus(2, 4).coeffs(), z(&[0, 0, 2, -1]).as_slice());
        let s = pochhammer_one_minus(3, 6);
        assert_eq!(s.valuation(), Some(3));
        assert_eq!(s.coeff(3), &BigInt::from(6));
        assert_eq!(pochhammer_one_minus(5, 5), ZSeries::zero(5));
    }

    #[test]
    fn pochhammer_one_minus_matches_composition() {
        for n in 0..8 {
            let brute = compose_one_minus_q(&brute_pochhammer(n), 12);
            assert_eq!(pochhammer_one_minus(n, 12), brute, "n={n}");
        }
    }

    #[test]
    fn pochhammer_one_minus_leading_term() {
        for order in 1..=20 {
            for n in 0..order {
                let s = pochhammer_one_minus(n, order);
                assert!(s.coeffs()[..n].iter().all(|c| c.is_zero()));
                assert_eq!(s.coeff(n), &factorial(n as u64));
            }
        }
    }

    #[test]
    fn power_of_one_minus_q_both_paths() {
        // repeated differencing and binomial convolution must agree
        let base: Vec<BigInt> = (1..=6).map(|i| BigInt::from(i * i - 3)).collect();
        for e in [0u64, 1, 5, 12, 13, 40] {
            let mut s = ZSeries::new(base.clone());
            mul_one_minus_q_pow(&mut s, e);
            let expect =
                ZSeries::new(base.clone()).mul(&ZSeries::from_poly(&ZPoly::from_i64(&[1, -1]).pow(e as u32), 6));
            assert_eq!(s, expect, "e={e}");
        }
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-9i64..=9, 0..=11).prop_map(|c| QPoly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(p in small_poly(), r in small_poly()) {
            let order = 16;
            let lhs = compose_one_minus_q(&p.mul(&r), order);
            let rhs: QSeries = compose_one_minus_q(&p, order).mul(&compose_one_minus_q(&r, order));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
