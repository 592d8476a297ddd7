//! Hikami's multi-sums
//!
//! ```text
//! F_m^(α)(q) = Σ (q;q)_{k_m} q^{k_1² + … + k_{m−1}² + k_{α+1} + … + k_{m−1}}
//!              · ∏_{i≠α} [k_{i+1} over k_i]_q · [k_{α+1}+1 over k_α]_q
//! ```
//!
//! with the last factor absent when `α = 0`. `F_1^(0)` is Kontsevich's `F`.
//! Every inner index appears exactly once as the lower entry of a Gaussian
//! binomial whose upper entry is the next index (plus a shift of 0 or 1), so
//! the sum for fixed `k_m` runs over a finite chain.

use num_bigint::BigInt;

use super::{horner_over_pochhammer, HabiroElement};
use crate::arith::{mul_one_minus_q_pow, qbinomial, ZPoly, ZSeries};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HikamiParams {
    m: usize,
    alpha: usize,
}

/// `[k_{upper} + shift over k_{lower}]_q` with `upper = lower + 1`.
#[derive(Clone, Copy, Debug)]
struct Coupling {
    lower: usize,
    shift: usize,
}

impl HikamiParams {
    pub fn new(m: usize, alpha: usize) -> Result<Self> {
        let ok = (m == 1 && alpha == 0) || (m >= 2 && alpha < m);
        if !ok {
            return Err(Error::InadmissibleHikami { m, alpha });
        }
        Ok(HikamiParams { m, alpha })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn id(&self) -> String {
        format!("hikami-m{}-a{}", self.m, self.alpha)
    }

    /// `(a, b)` of the partial theta function sharing this function's
    /// asymptotics: `a = 2m − 2α − 1`, `b = 8(2m + 1)`.
    pub fn theta_ab(&self) -> (i64, i64) {
        let (m, alpha) = (self.m as i64, self.alpha as i64);
        (2 * m - 2 * alpha - 1, 8 * (2 * m + 1))
    }

    /// One coupling per inner index `k_1, …, k_{m−1}`.
    fn couplings(&self) -> Vec<Coupling> {
        (1..self.m)
            .map(|i| Coupling {
                lower: i,
                shift: usize::from(i == self.alpha),
            })
            .collect()
    }

    /// Exponent contribution `k_i² + [i > α]·k_i` of inner index `i`.
    fn weight(&self, i: usize, k: usize) -> u64 {
        let k = k as u64;
        k * k + if i > self.alpha { k } else { 0 }
    }
}

/// Pascal triangle of `[u over v]` after `q ↦ 1 − q`, one row at a time,
/// row `u` truncated to `len(u)` coefficients.
struct ShiftedBinomialRows<F: Fn(usize) -> usize> {
    row: Vec<ZSeries>,
    u: usize,
    len: F,
}

impl<F: Fn(usize) -> usize> ShiftedBinomialRows<F> {
    fn new(len: F) -> Self {
        let row = vec![ZSeries::one(len(0))];
        ShiftedBinomialRows { row, u: 0, len }
    }

    fn advance(&mut self) {
        let u = self.u + 1;
        let len = (self.len)(u);
        let mut next = Vec::with_capacity(u + 1);
        for v in 0..=u {
            // [u,v] = [u−1,v−1] + q^v [u−1,v] = q^{u−v} [u−1,v−1] + [u−1,v]
            let (mut scaled, plain, power) = if v <= u - v {
                (
                    self.row.get(v).map(|s| s.truncated(len)),
                    v.checked_sub(1).map(|w| self.row[w].truncated(len)),
                    v,
                )
            } else {
                (
                    v.checked_sub(1).map(|w| self.row[w].truncated(len)),
                    self.row.get(v).map(|s| s.truncated(len)),
                    u - v,
                )
            };
            let mut entry = plain.unwrap_or_else(|| ZSeries::zero(len));
            if let Some(s) = scaled.as_mut() {
                mul_one_minus_q_pow(s, power as u64);
                entry.add_assign(s);
            }
            next.push(entry);
        }
        self.row = next;
        self.u = u;
    }

    fn row_at(&mut self, u: usize) -> &[ZSeries] {
        assert!(u >= self.u, "rows are produced in increasing order");
        while self.u < u {
            self.advance();
        }
        &self.row
    }
}

/// `ξ_m^(α)(0), …, ξ_m^(α)(N−1)`: the coefficients of `F_m^(α)(1 − q)`.
///
/// Every factor is mapped through `q ↦ 1 − q` before multiplying, and the
/// chain is evaluated level by level from `k_1` outwards.
pub fn hikami_sequence(m: usize, alpha: usize, order: usize) -> Result<Vec<BigInt>> {
    let params = HikamiParams::new(m, alpha)?;
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let couplings = params.couplings();

    // Upper bound of each index and the total shift between it and k_m.
    let mut bound = vec![0usize; m + 1];
    let mut slack = vec![0usize; m + 1];
    bound[m] = order - 1;
    for c in couplings.iter().rev() {
        bound[c.lower] = bound[c.lower + 1] + c.shift;
        slack[c.lower] = slack[c.lower + 1] + c.shift;
    }
    // Index i at value k forces k_m ≥ k − slack[i], so only N − that many
    // coefficients can survive the outer (1−q;1−q)_{k_m}.
    let len_at = |i: usize, k: usize| (order - k.saturating_sub(slack[i]).min(order)).min(order);

    // Level values G_i(k) for the current level i.
    let mut level: Vec<ZSeries> = Vec::new();
    for (idx, c) in couplings.iter().enumerate() {
        let i = c.lower;
        let mut next = Vec::with_capacity(bound[i] + 1);
        if idx == 0 {
            for k in 0..=bound[i] {
                let mut s = ZSeries::one(len_at(i, k));
                mul_one_minus_q_pow(&mut s, params.weight(i, k));
                next.push(s);
            }
        } else {
            let prev = &couplings[idx - 1];
            let mut rows = ShiftedBinomialRows::new(|u| order.min(order + 1 - u.min(order + 1)).max(1));
            for k in 0..=bound[i] {
                let len = len_at(i, k);
                let row = rows.row_at(k + prev.shift);
                let mut acc = transform(row, &level, len);
                mul_one_minus_q_pow(&mut acc, params.weight(i, k));
                next.push(acc);
            }
        }
        level = next;
    }

    let top_shift = couplings.last().map_or(0, |c| c.shift);
    let mut rows = ShiftedBinomialRows::new(|u| order.min(order + 1 - u.min(order + 1)).max(1));
    let inner: Vec<ZSeries> = (0..order)
        .map(|n| {
            let len = order - n;
            if couplings.is_empty() {
                ZSeries::one(len)
            } else {
                transform(rows.row_at(n + top_shift), &level, len)
            }
        })
        .collect();
    Ok(horner_over_pochhammer(order, |n, len| inner[n].truncated(len)))
}

/// `Σ_v [u over v]' · G(v)` modulo `q^len`.
fn transform(row: &[ZSeries], level: &[ZSeries], len: usize) -> ZSeries {
    let mut acc = ZSeries::zero(len);
    for (binom, g) in row.iter().zip(level) {
        acc.add_assign(&binom.truncated(len).mul(&g.truncated(len)));
    }
    acc
}

/// `F_m^(α)` as a Habiro element: `aₙ(q)` is the exact inner sum for
/// `k_m = n`. Polynomial degrees grow quadratically, so this is only
/// practical for small `n`; it serves as a cross-check of
/// [`hikami_sequence`].
pub fn hikami_element(m: usize, alpha: usize) -> Result<HabiroElement> {
    let params = HikamiParams::new(m, alpha)?;
    Ok(HabiroElement::new(params.id(), move |n| inner_polynomial(&params, n)))
}

fn inner_polynomial(params: &HikamiParams, n: usize) -> ZPoly {
    let couplings = params.couplings();
    let mut ks = vec![0usize; params.m + 1];
    ks[params.m] = n;
    let mut total = ZPoly::zero();
    enumerate_chain(params, &couplings, couplings.len(), &mut ks, &mut total);
    total
}

fn enumerate_chain(params: &HikamiParams, couplings: &[Coupling], depth: usize, ks: &mut [usize], total: &mut ZPoly) {
    if depth == 0 {
        let mut exponent = 0u64;
        let mut term = ZPoly::one();
        for c in couplings {
            exponent += params.weight(c.lower, ks[c.lower]);
            let upper = (ks[c.lower + 1] + c.shift) as i64;
            term = term.mul(&qbinomial(upper, ks[c.lower] as i64));
        }
        let shifted = ZPoly::monomial(BigInt::from(1), exponent as usize).mul(&term);
        *total = total.add(&shifted);
        return;
    }
    let c = couplings[depth - 1];
    let top = ks[c.lower + 1] + c.shift;
    for k in 0..=top {
        ks[c.lower] = k;
        enumerate_chain(params, couplings, depth - 1, ks, total);
    }
}

/// `ξ_2^(0)` from the explicit double sum
/// `F_2^(0) = Σ_n (q;q)_n Σ_k q^{k(k+1)} [n over k]_q`.
///
/// Uses `Bₙ,ₖ = q^{k(k+1)}[n over k]`, which satisfies
/// `Bₙ,ₖ = q^{2k} B_{n−1,k−1} + q^k B_{n−1,k}`; all in the variable `1 − q`.
pub fn hikami_f2_explicit(order: usize) -> Result<Vec<BigInt>> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    // row n is kept modulo q^{N−n}; only its sum over k is retained
    let mut row = vec![ZSeries::one(order)];
    let mut sums = vec![ZSeries::one(order)];
    for n in 1..order {
        let len = order - n;
        let mut next = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut entry = ZSeries::zero(len);
            if k >= 1 {
                let mut s = row[k - 1].truncated(len);
                mul_one_minus_q_pow(&mut s, 2 * k as u64);
                entry.add_assign(&s);
            }
            if k < n {
                let mut s = row[k].truncated(len);
                mul_one_minus_q_pow(&mut s, k as u64);
                entry.add_assign(&s);
            }
            next.push(entry);
        }
        let mut sum = ZSeries::zero(len);
        for entry in &next {
            sum.add_assign(entry);
        }
        sums.push(sum);
        row = next;
    }
    Ok(horner_over_pochhammer(order, |n, len| sums[n].truncated(len)))
}
