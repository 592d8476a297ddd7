//! Congruence prediction and verification for `H_{a,b,χ}(pᴬn − B) ≡ 0 (mod pᴬ)`.

mod density;
mod good;
mod kummer;
mod predict;
mod residue;
mod verify;

pub use density::{density_scan, DensityReport};
pub use good::{good_check, GoodDecomposition, GoodPair, GoodVerdict};
pub use kummer::kummer_valuation;
pub use predict::predict;
pub use residue::{
    beta, max_b_nonresidue, max_b_nonsquare, max_b_residue_sets, residue_range_check, residue_sets, RangeCheckReport,
    RangeDivergence, ResidueSets,
};
pub use verify::{
    verify_claim, verify_congruence, verify_linear_combo, ClaimSource, ClaimStatus, CongruenceClaim, PAdicValue,
    Witness,
};

/// `x mod m` in `[0, m)`.
pub(crate) fn modp(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// Inverse of `x` modulo `m`, if it exists.
pub(crate) fn inverse_mod(x: i128, m: u64) -> Option<u64> {
    use num_integer::Integer;
    let x = modp(x, m) as i128;
    let g = x.extended_gcd(&(m as i128));
    (g.gcd == 1).then(|| modp(g.x, m))
}
