use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{is_prime, legendre, primes_up_to};
use crate::Result;

/// Distribution of `(a² − b | p) = −1` over odd primes `p ∤ b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub pmax: u64,
    pub discriminant: i64,
    /// Odd primes `p ≤ pmax` with `p ∤ b`.
    pub considered: usize,
    /// Those with `(a² − b | p) = −1`, each carrying a `B = 1` claim.
    pub nonresidue_primes: Vec<u64>,
    /// Those with `(a² − b | p) ≠ 1`.
    pub nonsquare_primes: Vec<u64>,
    pub fraction: f64,
    /// The symbol is constant on residue classes of this modulus.
    pub modulus: u64,
    pub nonresidue_classes: BTreeSet<u64>,
    /// `a² − b` is neither zero nor a perfect square, so the fraction tends to 1/2.
    pub half_density_expected: bool,
}

fn is_square(n: i64) -> bool {
    n >= 0 && {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).any(|s| s >= 0 && s * s == n)
    }
}

pub fn density_scan(a: i64, b: i64, pmax: u64) -> Result<DensityReport> {
    let disc = a * a - b;
    let modulus = if disc.rem_euclid(4) == 1 {
        disc.unsigned_abs()
    } else {
        4 * disc.unsigned_abs()
    }
    .max(1);
    let mut report = DensityReport {
        pmax,
        discriminant: disc,
        considered: 0,
        nonresidue_primes: Vec::new(),
        nonsquare_primes: Vec::new(),
        fraction: 0.0,
        modulus,
        nonresidue_classes: BTreeSet::new(),
        half_density_expected: disc != 0 && !is_square(disc),
    };
    for p in primes_up_to(pmax).into_iter().filter(|&p| p > 2 && b % p as i64 != 0) {
        debug_assert!(is_prime(p));
        report.considered += 1;
        let symbol = legendre(disc, p)?;
        if symbol != 1 {
            report.nonsquare_primes.push(p);
        }
        if symbol == -1 {
            report.nonresidue_primes.push(p);
            report.nonresidue_classes.insert(p % modulus);
        }
    }
    if report.considered > 0 {
        report.fraction = report.nonresidue_primes.len() as f64 / report.considered as f64;
    }
    Ok(report)
}
