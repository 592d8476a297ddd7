use crate::{Error, Result};

/// Number of carries when adding `k` and `n − k` in base `p`, which equals
/// `ord_p(C(n, k))` (Kummer).
pub fn kummer_valuation(n: u64, k: u64, p: u64) -> Result<u64> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let (mut x, mut y) = (k, n - k);
    let mut carry = 0;
    let mut carries = 0;
    while x > 0 || y > 0 || carry > 0 {
        let s = x % p + y % p + carry;
        carry = u64::from(s >= p);
        carries += carry;
        x /= p;
        y /= p;
    }
    Ok(carries)
}
