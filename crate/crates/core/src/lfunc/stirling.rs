use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Signed first-kind Stirling numbers `s(n, k)`, rows `0..=n`:
/// `Σ_k s(n,k) x^k = x(x−1)⋯(x−n+1)`.
pub fn stirling1_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::zero(); i + 1];
        for k in 1..=i {
            let mut v = prev.get(k - 1).cloned().unwrap_or_default();
            if let Some(p) = prev.get(k) {
                v -= p * (i - 1);
            }
            row[k] = v;
        }
        rows.push(row);
    }
    rows
}

/// Second-kind Stirling numbers `{n over k}`, rows `0..=n`.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::zero(); i + 1];
        for k in 1..=i {
            let mut v = prev.get(k - 1).cloned().unwrap_or_default();
            if let Some(p) = prev.get(k) {
                v += p * k;
            }
            row[k] = v;
        }
        rows.push(row);
    }
    rows
}

pub fn stirling1(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_table(n).swap_remove(n).swap_remove(k)
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_table(n).swap_remove(n).swap_remove(k)
}
