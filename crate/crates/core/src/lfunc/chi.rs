use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Periodic integer function of mean value zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawChi", into = "RawChi")]
pub struct PeriodicChi {
    values: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawChi {
    period: usize,
    values: Vec<i64>,
}

impl TryFrom<RawChi> for PeriodicChi {
    type Error = String;

    fn try_from(raw: RawChi) -> std::result::Result<Self, String> {
        if raw.values.len() != raw.period {
            return Err(format!(
                "period is {} but {} values were given",
                raw.period,
                raw.values.len()
            ));
        }
        PeriodicChi::new(raw.values).map_err(|e| e.to_string())
    }
}

impl From<PeriodicChi> for RawChi {
    fn from(chi: PeriodicChi) -> Self {
        RawChi {
            period: chi.period(),
            values: chi.values,
        }
    }
}

impl PeriodicChi {
    /// `values[a]` is `χ(a)` for `0 ≤ a < M`.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let sum: i64 = values.iter().sum();
        if sum != 0 {
            return Err(Error::NonzeroMean { sum });
        }
        Ok(PeriodicChi { values })
    }

    /// Build from `(residue, value)` pairs; unlisted residues are zero.
    pub fn from_residues(period: usize, entries: &[(usize, i64)]) -> Result<Self> {
        if period == 0 {
            return Err(Error::EmptyPeriod);
        }
        let mut values = vec![0; period];
        for &(r, v) in entries {
            values[r % period] += v;
        }
        Self::new(values)
    }

    /// `χ₁₂(n) = (12 | n)`.
    pub fn chi12() -> Self {
        Self::from_residues(12, &[(1, 1), (5, -1), (7, -1), (11, 1)]).expect("chi12 has mean zero")
    }

    /// `χ_{8m+4}^{(α)}`: `+1` at `2m−2α−1` and `6m+2α+5`, `−1` at `2m+2α+3`
    /// and `6m−2α+1`, modulo `8m+4`.
    pub fn hikami(m: usize, alpha: usize) -> Self {
        let (m, a) = (m as i64, alpha as i64);
        let period = 8 * m + 4;
        let r = |x: i64| x.rem_euclid(period) as usize;
        Self::from_residues(
            period as usize,
            &[
                (r(2 * m - 2 * a - 1), 1),
                (r(2 * m + 2 * a + 3), -1),
                (r(6 * m - 2 * a + 1), -1),
                (r(6 * m + 2 * a + 5), 1),
            ],
        )
        .expect("Hikami characters have mean zero")
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn at(&self, n: i64) -> i64 {
        self.values[n.rem_euclid(self.period() as i64) as usize]
    }

    /// Residues `a` in `[0, M)` with `χ(a) ≠ 0`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.iter().enumerate().filter(|(_, v)| **v != 0).map(|(a, _)| a)
    }

    pub fn is_ternary(&self) -> bool {
        self.values.iter().all(|v| (-1..=1).contains(v))
    }

    pub fn require_ternary(&self) -> Result<()> {
        match self.values.iter().enumerate().find(|(_, v)| !(-1..=1).contains(*v)) {
            Some((residue, &value)) => Err(Error::NonTernaryValue { residue, value }),
            None => Ok(()),
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for PeriodicChi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi mod {} [", self.period())?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
