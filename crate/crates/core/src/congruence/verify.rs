use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{ord_p, ord_p_int, Rational, Valuation};
use crate::{Error, Result};

/// Values whose `p`-adic order can be taken.
pub trait PAdicValue: Sync + fmt::Display {
    fn p_valuation(&self, p: u64) -> Valuation;
}

impl PAdicValue for BigInt {
    fn p_valuation(&self, p: u64) -> Valuation {
        ord_p_int(self, p)
    }
}

impl PAdicValue for Rational {
    fn p_valuation(&self, p: u64) -> Valuation {
        ord_p(self, p)
    }
}

/// Which bound produced a predicted `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimSource {
    /// Every `(a² − jb | p) = −1`.
    NonResidue,
    /// Every `(a² − jb | p) ≠ 1`, with `β ≠ p − 1`.
    NonSquare,
    /// `B ≤ p − 1 − max S*`.
    SStar,
    /// `B ≤ p − 1 − max S`, with `β ≠ p − 1`.
    S,
    /// Supplied by the user.
    Declared,
}

impl fmt::Display for ClaimSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimSource::NonResidue => "non-residue",
            ClaimSource::NonSquare => "non-square",
            ClaimSource::SStar => "s-star",
            ClaimSource::S => "s",
            ClaimSource::Declared => "declared",
        })
    }
}

/// A failing instance: `ord_p(H(pᴬn − B)) = valuation < A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: u64,
    pub a: u32,
    pub index: u64,
    pub value: String,
    pub valuation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ClaimStatus {
    Predicted,
    Verified,
    Refuted { witness: Witness },
}

/// `H(pᴬn − B) ≡ 0 (mod pᴬ)` for all `A ≥ 1`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceClaim {
    pub p: u64,
    #[serde(rename = "B")]
    pub b: u64,
    pub source: ClaimSource,
    #[serde(rename = "A_max")]
    pub max_a_tested: u32,
    #[serde(flatten)]
    pub status: ClaimStatus,
}

impl CongruenceClaim {
    pub fn new(p: u64, b: u64, source: ClaimSource) -> Self {
        CongruenceClaim {
            p,
            b,
            source,
            max_a_tested: 0,
            status: ClaimStatus::Predicted,
        }
    }
}

fn index(p: u64, a: u32, n: u64, b: u64) -> Option<u64> {
    p.checked_pow(a)?.checked_mul(n)?.checked_sub(b)
}

fn witness_at<V: PAdicValue>(seq: &[V], p: u64, a: u32, n: u64, idx: u64) -> Result<Option<Witness>> {
    let value = &seq[idx as usize];
    match value.p_valuation(p) {
        Valuation::Infinite => Ok(None),
        Valuation::Finite(v) if v < 0 => Err(Error::NotPIntegral {
            index: idx as usize,
            p,
            valuation: v,
        }),
        Valuation::Finite(v) if v >= i64::from(a) => Ok(None),
        Valuation::Finite(v) => Ok(Some(Witness {
            n,
            a,
            index: idx,
            value: value.to_string(),
            valuation: v,
        })),
    }
}

/// Checks the congruence for `1 ≤ n ≤ nmax`, reporting the smallest failing `n`.
pub fn verify_congruence<V: PAdicValue>(seq: &[V], p: u64, a: u32, b: u64, nmax: u64) -> Result<ClaimStatus> {
    if nmax == 0 {
        return Ok(ClaimStatus::Verified);
    }
    let need = index(p, a, nmax, b).map_or(u64::MAX, |i| i.saturating_add(1));
    if need > seq.len() as u64 {
        return Err(Error::SequenceTooShort {
            need: need as usize,
            have: seq.len(),
        });
    }
    let found = (1..=nmax).into_par_iter().find_map_first(|n| match index(p, a, n, b) {
        None => None,
        Some(idx) => witness_at(seq, p, a, n, idx).transpose(),
    });
    match found.transpose()? {
        Some(witness) => Ok(ClaimStatus::Refuted { witness }),
        None => Ok(ClaimStatus::Verified),
    }
}

/// Tests `A = 1..=max_a` using every `n` whose index fits in `seq`, stopping at
/// the first refutation.
pub fn verify_claim<V: PAdicValue>(claim: &mut CongruenceClaim, seq: &[V], max_a: u32) -> Result<()> {
    for a in 1..=max_a {
        let Some(pa) = claim.p.checked_pow(a) else { break };
        let nmax = (seq.len() as u64 + claim.b).saturating_sub(1) / pa;
        if nmax == 0 {
            break;
        }
        let status = verify_congruence(seq, claim.p, a, claim.b, nmax)?;
        claim.max_a_tested = a;
        claim.status = status;
        if matches!(claim.status, ClaimStatus::Refuted { .. }) {
            return Ok(());
        }
    }
    if claim.max_a_tested == 0 {
        return Err(Error::SequenceTooShort {
            need: (claim.p.saturating_sub(claim.b) + 1) as usize,
            have: seq.len(),
        });
    }
    Ok(())
}

/// Checks `Σ cᵢ·seq(pn + rᵢ) ≡ 0 (mod p)` for `0 ≤ n ≤ nmax`.
pub fn verify_linear_combo(seq: &[BigInt], p: u64, terms: &[(i64, u64)], nmax: u64) -> Result<ClaimStatus> {
    let reach = terms.iter().map(|&(_, r)| p * nmax + r).max().unwrap_or(0);
    if reach >= seq.len() as u64 {
        return Err(Error::SequenceTooShort {
            need: reach as usize + 1,
            have: seq.len(),
        });
    }
    let pb = BigInt::from(p);
    let found = (0..=nmax).into_par_iter().find_map_first(|n| {
        let sum: BigInt = terms
            .iter()
            .map(|&(c, r)| BigInt::from(c) * &seq[(p * n + r) as usize])
            .sum();
        (!(&sum % &pb).is_zero()).then(|| Witness {
            n,
            a: 1,
            index: p * n,
            value: sum.to_string(),
            valuation: 0,
        })
    });
    Ok(found.map_or(ClaimStatus::Verified, |witness| ClaimStatus::Refuted { witness }))
}
