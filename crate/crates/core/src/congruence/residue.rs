use std::collections::BTreeSet;

use num_integer::Integer;

use super::{inverse_mod, modp};
use crate::arith::{is_prime, legendre};
use crate::lfunc::PeriodicChi;
use crate::{Error, Result};

/// Residues `s < p` attained by `(x² − a²)/b mod p`:
/// `S*` over `x ∈ supp χ`, `S` over `x ∈ supp χ` with `p ∤ x`,
/// `T*` over all `x`, `T` over all `x` with `p ∤ x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSets {
    pub p: u64,
    pub s: BTreeSet<u64>,
    pub s_star: BTreeSet<u64>,
    pub t: BTreeSet<u64>,
    pub t_star: BTreeSet<u64>,
}

fn check_prime_not_dividing(b: i64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    inverse_mod(b as i128, p).ok_or(Error::PrimeDividesB { p, b })
}

fn check_odd(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

pub fn residue_sets(a: i64, b: i64, chi: &PeriodicChi, p: u64) -> Result<ResidueSets> {
    let b_inv = check_prime_not_dividing(b, p)?;
    let value = |x: u64| modp((x as i128 * x as i128 - a as i128 * a as i128) * b_inv as i128, p);
    let mut sets = ResidueSets {
        p,
        s: BTreeSet::new(),
        s_star: BTreeSet::new(),
        t: BTreeSet::new(),
        t_star: BTreeSet::new(),
    };
    for x in 0..p {
        let v = value(x);
        sets.t_star.insert(v);
        if x != 0 {
            sets.t.insert(v);
        }
    }
    let m = chi.period() as u64;
    let period = m.lcm(&p);
    for x in (0..period).filter(|&x| chi.at(x as i64) != 0) {
        let v = value(x);
        sets.s_star.insert(v);
        if x % p != 0 {
            sets.s.insert(v);
        }
    }
    Ok(sets)
}

/// The `p¹` digit of `−a²/b` in ℤ_p.
pub fn beta(a: i64, b: i64, p: u64) -> Result<u64> {
    check_prime_not_dividing(b, p)?;
    let p2 = p * p;
    let b_inv = inverse_mod(b as i128, p2).expect("p does not divide b");
    let r = modp(-(a as i128 * a as i128) * b_inv as i128, p2);
    Ok(r / p)
}

/// Longest run `j = 1, 2, …` with `ok((a² − jb | p))`, capped at `p − 1`.
fn symbol_run(a: i64, b: i64, p: u64, ok: impl Fn(i8) -> bool) -> Result<u64> {
    let mut run = 0;
    for j in 1..p {
        let value = modp(a as i128 * a as i128 - j as i128 * b as i128, p) as i64;
        if !ok(legendre(value, p)?) {
            break;
        }
        run = j;
    }
    Ok(run)
}

/// Largest `B` with `(a² − jb | p) = −1` for `j = 1..B`.
pub fn max_b_nonresidue(a: i64, b: i64, p: u64) -> Result<u64> {
    check_odd(p)?;
    check_prime_not_dividing(b, p)?;
    symbol_run(a, b, p, |s| s == -1)
}

/// Largest `B` with `(a² − jb | p) ≠ 1` for `j = 1..B`; `None` when the
/// digit `β = p − 1` makes this bound inapplicable.
pub fn max_b_nonsquare(a: i64, b: i64, p: u64) -> Result<Option<u64>> {
    check_odd(p)?;
    if beta(a, b, p)? == p - 1 {
        return Ok(None);
    }
    symbol_run(a, b, p, |s| s != 1).map(Some)
}

fn range_from_max(set: &BTreeSet<u64>, p: u64) -> u64 {
    match set.last() {
        Some(&m) => p - 1 - m,
        None => p - 1,
    }
}

/// `(p − 1 − max S*, p − 1 − max S)`, the second only when `β ≠ p − 1`.
pub fn max_b_residue_sets(a: i64, b: i64, chi: &PeriodicChi, p: u64) -> Result<(u64, Option<u64>)> {
    let sets = residue_sets(a, b, chi, p)?;
    let part2 = (beta(a, b, p)? != p - 1).then(|| range_from_max(&sets.s, p));
    Ok((range_from_max(&sets.s_star, p), part2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeDivergence {
    /// Legendre chain `= −1` vs `B ≤ p − 1 − max T*`.
    NonResidueChain,
    /// Legendre chain `≠ 1` vs `B ≤ p − 1 − max T`.
    NonSquareChain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeCheckReport {
    pub p: u64,
    pub bmax: u64,
    pub divergences: Vec<(u64, RangeDivergence)>,
}

impl RangeCheckReport {
    pub fn consistent(&self) -> bool {
        self.divergences.is_empty()
    }
}

/// Evaluates both forms of both equivalences for every `B ≤ bmax`.
pub fn residue_range_check(a: i64, b: i64, p: u64, bmax: u64) -> Result<RangeCheckReport> {
    check_odd(p)?;
    // S-sets are irrelevant here; any character works for the T-sets.
    let sets = residue_sets(a, b, &PeriodicChi::new(vec![0]).expect("zero character"), p)?;
    let symbols: Vec<i8> = (1..=bmax)
        .map(|j| legendre(modp(a as i128 * a as i128 - j as i128 * b as i128, p) as i64, p))
        .collect::<Result<_>>()?;
    let in_range = |set: &BTreeSet<u64>, bb: u64| set.last().is_none_or(|&m| bb + m < p);
    let mut divergences = Vec::new();
    for bb in 1..=bmax {
        let chain = &symbols[..bb as usize];
        let residue_chain = chain.iter().all(|&s| s == -1);
        let square_chain = chain.iter().all(|&s| s != 1);
        if residue_chain != in_range(&sets.t_star, bb) {
            divergences.push((bb, RangeDivergence::NonResidueChain));
        }
        if square_chain != in_range(&sets.t, bb) {
            divergences.push((bb, RangeDivergence::NonSquareChain));
        }
    }
    Ok(RangeCheckReport { p, bmax, divergences })
}
