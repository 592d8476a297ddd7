use rayon::prelude::*;

use super::residue::{max_b_nonresidue, max_b_nonsquare, max_b_residue_sets};
use super::verify::{ClaimSource, CongruenceClaim};
use crate::arith::primes_up_to;
use crate::lfunc::ThetaDatum;
use crate::Result;

/// Congruence claims for every odd prime `p ≤ pmax` with `p ∤ b`.
///
/// Each `B` is listed once, attributed to the first bound that covers it in
/// the order non-residue chain, non-square chain, `S*`, `S`. When `p | M` only the residue-set
/// bounds apply. The residue-set bounds assume χ is good; see
/// [`good_check`](super::good_check).
pub fn predict(d: &ThetaDatum, pmax: u64) -> Result<Vec<CongruenceClaim>> {
    let (a, b) = (d.a(), d.b());
    let m = d.chi().period() as u64;
    let primes: Vec<u64> = primes_up_to(pmax)
        .into_iter()
        .filter(|&p| p > 2 && b % p as i64 != 0)
        .collect();
    let per_prime: Vec<Vec<CongruenceClaim>> = primes
        .par_iter()
        .map(|&p| -> Result<Vec<CongruenceClaim>> {
            let (s_star, s) = max_b_residue_sets(a, b, d.chi(), p)?;
            let mut bounds = Vec::with_capacity(4);
            if m % p != 0 {
                bounds.push((ClaimSource::NonResidue, max_b_nonresidue(a, b, p)?));
                if let Some(bound) = max_b_nonsquare(a, b, p)? {
                    bounds.push((ClaimSource::NonSquare, bound));
                }
            }
            bounds.push((ClaimSource::SStar, s_star));
            if let Some(bound) = s {
                bounds.push((ClaimSource::S, bound));
            }
            let top = bounds.iter().map(|&(_, bound)| bound).max().unwrap_or(0);
            Ok((1..=top)
                .map(|bb| {
                    let source = bounds
                        .iter()
                        .find(|&&(_, bound)| bb <= bound)
                        .expect("covered by the max")
                        .0;
                    CongruenceClaim::new(p, bb, source)
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_prime.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::legendre;
    use crate::lfunc::PeriodicChi;

    #[test]
    fn fishburn_small_primes() {
        let claims = predict(&ThetaDatum::fishburn(), 13).unwrap();
        let listed: Vec<(u64, u64)> = claims.iter().map(|c| (c.p, c.b)).collect();
        assert_eq!(listed, vec![(5, 1), (5, 2), (7, 1), (11, 1), (11, 2), (11, 3)]);
        assert!(claims
            .iter()
            .filter(|c| c.p == 5)
            .all(|c| c.source == ClaimSource::NonResidue));
        assert_eq!(
            claims.iter().find(|c| c.p == 7).unwrap().source,
            ClaimSource::NonResidue
        );
    }

    #[test]
    fn fishburn_nonresidue_primes_carry_a_claim() {
        let claims = predict(&ThetaDatum::fishburn(), 200).unwrap();
        for p in primes_up_to(200).into_iter().filter(|&p| p > 3) {
            let has = claims.iter().any(|c| c.p == p && c.b == 1);
            if legendre(-23, p).unwrap() == -1 {
                assert!(has, "p={p}");
            }
            if legendre(-23, p).unwrap() == 1 {
                assert!(!has, "p={p}");
            }
        }
    }

    #[test]
    fn prime_dividing_period_uses_residue_sets_only() {
        let d = ThetaDatum::new(
            1,
            5,
            PeriodicChi::new(vec![0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0]).unwrap(),
        );
        if let Ok(d) = d {
            let claims = predict(&d, 7).unwrap();
            assert!(claims
                .iter()
                .filter(|c| c.p == 7)
                .all(|c| matches!(c.source, ClaimSource::SStar | ClaimSource::S)));
        }
        let d = ThetaDatum::hikami(2, 0).unwrap();
        let claims = predict(&d, 5).unwrap();
        assert!(claims
            .iter()
            .filter(|c| c.p == 5)
            .all(|c| matches!(c.source, ClaimSource::SStar | ClaimSource::S)));
    }
}
