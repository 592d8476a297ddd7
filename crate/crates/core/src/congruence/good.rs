use num_integer::Integer;

use crate::lfunc::PeriodicChi;
use crate::Result;

/// One pairing `χ(u) = 1`, `χ(v) = −1` with `v ≡ Cu (mod M)` and `(C, M) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GoodPair {
    pub u: u64,
    pub v: u64,
    pub c: u64,
}

/// Witness that `χ = Σ (δ_{u} − δ_{Cu})` over the listed pairs.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GoodDecomposition {
    pub period: u64,
    pub pairs: Vec<GoodPair>,
}

impl GoodDecomposition {
    /// The character the pairs describe.
    pub fn reconstruct(&self) -> Vec<i64> {
        let mut values = vec![0; self.period as usize];
        for pair in &self.pairs {
            values[pair.u as usize] += 1;
            values[pair.v as usize] -= 1;
        }
        values
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum GoodVerdict {
    Good(GoodDecomposition),
    /// Residues with `gcd(x, M) = divisor` carry unequal numbers of `+1` and `−1`.
    NotGood {
        divisor: u64,
        plus: usize,
        minus: usize,
    },
}

impl GoodVerdict {
    pub fn is_good(&self) -> bool {
        matches!(self, GoodVerdict::Good(_))
    }
}

/// Decides whether a ternary character is a signed sum of `δ_u − δ_{Cu}`.
///
/// `u` and `Cu` share `gcd(·, M)` and every pair of residues sharing that gcd
/// is related by a unit, so χ is good exactly when `+1` and `−1` balance
/// inside each gcd class.
pub fn good_check(chi: &PeriodicChi) -> Result<GoodVerdict> {
    chi.require_ternary()?;
    let m = chi.period() as u64;
    let divisors = (1..=m).filter(|d| m % d == 0);
    let mut pairs = Vec::new();
    for d in divisors {
        let class =
            |sign: i64| -> Vec<u64> { (0..m).filter(|&x| x.gcd(&m) == d && chi.at(x as i64) == sign).collect() };
        let (plus, minus) = (class(1), class(-1));
        if plus.len() != minus.len() {
            return Ok(GoodVerdict::NotGood {
                divisor: d,
                plus: plus.len(),
                minus: minus.len(),
            });
        }
        for (&u, &v) in plus.iter().zip(&minus) {
            let c = unit_multiplier(u, v, m).expect("residues with equal gcd differ by a unit");
            pairs.push(GoodPair { u, v, c });
        }
    }
    Ok(GoodVerdict::Good(GoodDecomposition { period: m, pairs }))
}

fn unit_multiplier(u: u64, v: u64, m: u64) -> Option<u64> {
    (1..=m).find(|&c| c.gcd(&m) == 1 && (c * u) % m == v % m)
}

/// Used by the tests as an independent check of [`good_check`].
#[cfg(test)]
fn brute_force_good(values: &[i64]) -> bool {
    let m = values.len() as u64;
    let plus: Vec<u64> = (0..m).filter(|&x| values[x as usize] == 1).collect();
    let minus: Vec<u64> = (0..m).filter(|&x| values[x as usize] == -1).collect();
    if plus.len() != minus.len() {
        return false;
    }
    fn search(plus: &[u64], minus: &mut Vec<u64>, m: u64) -> bool {
        let Some((&u, rest)) = plus.split_first() else {
            return true;
        };
        for i in 0..minus.len() {
            let v = minus.swap_remove(i);
            if unit_multiplier(u, v, m).is_some() && search(rest, minus, m) {
                return true;
            }
            minus.push(v);
            let last = minus.len() - 1;
            minus.swap(i, last);
        }
        false
    }
    search(&plus, &mut minus.clone(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn verdict(values: Vec<i64>) -> GoodVerdict {
        good_check(&PeriodicChi::new(values).unwrap()).unwrap()
    }

    #[test]
    fn chi12_is_good() {
        let GoodVerdict::Good(d) = verdict(PeriodicChi::chi12().values().to_vec()) else {
            panic!("χ12 should be good");
        };
        assert_eq!(d.reconstruct(), PeriodicChi::chi12().values());
        assert_eq!(d.pairs.len(), 2);
    }

    #[test]
    fn hikami_characters_are_good() {
        for (m, alpha) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 2)] {
            let chi = PeriodicChi::hikami(m, alpha);
            assert!(good_check(&chi).unwrap().is_good(), "m={m} α={alpha}");
        }
    }

    #[test]
    fn mean_zero_but_not_good() {
        assert_eq!(
            verdict(vec![0, 1, -1, 0]),
            GoodVerdict::NotGood {
                divisor: 1,
                plus: 1,
                minus: 0
            }
        );
        assert!(verdict(vec![0, 1, 0, -1]).is_good());
        assert_eq!(
            verdict(vec![1, -1]),
            GoodVerdict::NotGood {
                divisor: 1,
                plus: 0,
                minus: 1
            }
        );
    }

    #[test]
    fn non_ternary_rejected() {
        let chi = PeriodicChi::new(vec![0, 2, 0, -2]).unwrap();
        assert!(matches!(good_check(&chi), Err(Error::NonTernaryValue { .. })));
    }

    #[test]
    fn agrees_with_exhaustive_pairing_search() {
        let mut good = 0;
        for m in 1..=8u32 {
            for code in 0..3u32.pow(m) {
                let values: Vec<i64> = (0..m).map(|i| (code / 3u32.pow(i) % 3) as i64 - 1).collect();
                if values.iter().sum::<i64>() != 0 {
                    continue;
                }
                let chi = PeriodicChi::new(values.clone()).unwrap();
                let verdict = good_check(&chi).unwrap();
                assert_eq!(verdict.is_good(), brute_force_good(&values), "{values:?}");
                if let GoodVerdict::Good(d) = verdict {
                    good += 1;
                    assert_eq!(d.reconstruct(), values);
                    for pair in &d.pairs {
                        assert_eq!(pair.c.gcd(&(m as u64)), 1);
                        assert_eq!(pair.c * pair.u % m as u64, pair.v);
                    }
                }
            }
        }
        assert!(good > 100);
    }
}
