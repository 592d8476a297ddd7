//! Habiro-ring elements `Σ aₙ(q)(q;q)ₙ` and their expansion at `q = 1`.
//!
//! An element is a generator `n ↦ aₙ(q)`; the expansion to order `N` only
//! ever asks for `n < N`, because `(1−q;1−q)ₙ = O(qⁿ)`.

pub mod hikami;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{compose_one_minus_q, qseries_internal::one_minus_shifted_power, ZPoly, ZSeries};
use crate::{Error, Result};

pub use hikami::{hikami_element, hikami_f2_explicit, hikami_sequence, HikamiParams};

type Generator = dyn Fn(usize) -> ZPoly + Send + Sync;

/// Element of the Habiro ring given by its coefficient stream `aₙ(q) ∈ ℤ[q]`.
#[derive(Clone)]
pub struct HabiroElement {
    id: String,
    generator: Arc<Generator>,
}

impl HabiroElement {
    pub fn new(id: impl Into<String>, generator: impl Fn(usize) -> ZPoly + Send + Sync + 'static) -> Self {
        HabiroElement {
            id: id.into(),
            generator: Arc::new(generator),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// The coefficient polynomial `aₙ(q)`.
    pub fn term(&self, n: usize) -> ZPoly {
        (self.generator)(n)
    }
}

impl fmt::Debug for HabiroElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HabiroElement")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

/// Kontsevich's `F(q) = Σ (q;q)ₙ`: every `aₙ` is 1.
pub fn kontsevich() -> HabiroElement {
    HabiroElement::new("kontsevich", |_| ZPoly::one())
}

/// Coefficients `c₀, …, c_{N−1}` of `φ₁(e) = Σ cₙ (1−q)ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi1Expansion {
    pub source: String,
    pub coeffs: Vec<BigInt>,
}

impl Phi1Expansion {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }
}

/// Multiply a series of order `L − 1` by `1 − (1−q)^j` (valuation one),
/// producing a series of order `L`.
pub(crate) fn mul_by_shifted_factor(acc: &ZSeries, j: u64, order: usize) -> ZSeries {
    let f = one_minus_shifted_power(j, order);
    let prev = acc.coeffs();
    let mut out = vec![BigInt::zero(); order];
    for (i, slot) in out.iter_mut().enumerate().skip(1) {
        let mut sum = BigInt::zero();
        for s in 1..=i.min(j as usize) {
            if let Some(c) = prev.get(i - s) {
                sum += &f[s] * c;
            }
        }
        *slot = sum;
    }
    ZSeries::new(out)
}

/// Nested (Horner) evaluation of `Σ_{n<N} bₙ · (1−q;1−q)ₙ mod q^N`, where
/// `inner(n, L)` returns `bₙ` modulo `q^L` with `L = N − n`.
pub(crate) fn horner_over_pochhammer(order: usize, mut inner: impl FnMut(usize, usize) -> ZSeries) -> Vec<BigInt> {
    let mut acc = ZSeries::zero(0);
    for n in (0..order).rev() {
        let len = order - n;
        let head = inner(n, len);
        debug_assert_eq!(head.order(), len);
        let tail = mul_by_shifted_factor(&acc, n as u64 + 1, len);
        acc = head.add(&tail);
    }
    acc.into_coeffs()
}

/// Expansion of `e` at `q = 1` to order `N`.
pub fn phi_one(e: &HabiroElement, order: usize) -> Result<Phi1Expansion> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let coeffs = horner_over_pochhammer(order, |n, len| compose_one_minus_q(&e.term(n), len));
    Ok(Phi1Expansion {
        source: e.id().to_string(),
        coeffs,
    })
}

/// Fishburn numbers `ξ(0), …, ξ(N−1)`.
pub fn fishburn(order: usize) -> Result<Vec<BigInt>> {
    Ok(phi_one(&kontsevich(), order)?.coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{pochhammer_one_minus, Poly};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Direct sum of `(1−q;1−q)ₙ` expansions, each built factor by factor.
    fn fishburn_oracle(order: usize) -> Vec<BigInt> {
        let mut total = ZSeries::zero(order);
        for n in 0..order {
            total = total.add(&pochhammer_one_minus(n, order));
        }
        total.into_coeffs()
    }

    #[test]
    fn kontsevich_expansion() {
        let expect = ints(&[1, 1, 2, 5, 15, 53, 217, 1014, 5335]);
        assert_eq!(fishburn_oracle(9), expect);
        assert_eq!(fishburn(9).unwrap(), expect);
        assert_eq!(fishburn(3).unwrap(), ints(&[1, 1, 2]));
        assert_eq!(kontsevich().term(5), ZPoly::one());
    }

    #[test]
    fn fishburn_small_congruences() {
        let xi = fishburn(7).unwrap();
        assert_eq!(&xi[4] % 5, BigInt::zero());
        assert_eq!(xi[6], BigInt::from(217));
        assert_eq!(&xi[6] % 7, BigInt::zero());
    }

    #[test]
    fn trivial_elements() {
        let zero = HabiroElement::new("zero", |_| ZPoly::zero());
        assert!(phi_one(&zero, 6).unwrap().coeffs.iter().all(|c| c.is_zero()));
        let one = HabiroElement::new("one", |n| if n == 0 { ZPoly::one() } else { ZPoly::zero() });
        assert_eq!(phi_one(&one, 4).unwrap().coeffs, ints(&[1, 0, 0, 0]));
        assert_eq!(phi_one(&one, 0), Err(Error::ZeroOrder));
    }

    #[test]
    fn polynomial_coefficients_are_substituted() {
        // aₙ = q^n: Σ (1−q)^n (1−q;1−q)_n, checked against the oracle built by hand
        let e = HabiroElement::new("qn", |n| Poly::monomial(BigInt::from(1), n));
        let order = 8;
        let mut total = ZSeries::zero(order);
        for n in 0..order {
            let a = compose_one_minus_q(&ZPoly::monomial(BigInt::from(1), n), order);
            total = total.add(&a.mul(&pochhammer_one_minus(n, order)));
        }
        assert_eq!(phi_one(&e, order).unwrap().coeffs, total.into_coeffs());
    }

    #[test]
    fn truncation_stability() {
        let e = HabiroElement::new("mixed", |n| ZPoly::from_i64(&[1, -(n as i64), 2]));
        for elem in [kontsevich(), e] {
            let long = phi_one(&elem, 40).unwrap().coeffs;
            for order in [10, 20] {
                assert_eq!(phi_one(&elem, order).unwrap().coeffs[..], long[..order]);
            }
        }
    }
}
