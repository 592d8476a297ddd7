//! Character files and claims files, both TOML.
//!
//! ```toml
//! period = 12
//! values = [0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]
//! ```
//!
//! ```toml
//! [[claim]]
//! p = 5
//! A = 2
//! B = 1
//! ```

use qmf_core::arith::is_prime;
use qmf_core::lfunc::PeriodicChi;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("malformed TOML: {}", .0.message())]
    Toml(#[from] toml::de::Error),
    #[error("claim {index}: {reason}")]
    BadClaim { index: usize, reason: String },
    #[error("claims file lists no claims")]
    NoClaims,
}

pub fn parse_chi_file(text: &str) -> Result<PeriodicChi, FileError> {
    Ok(toml::from_str(text)?)
}

/// One `{p, A, B}` record: `H(pᴬn − B) ≡ 0 (mod pᴬ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimSpec {
    pub p: u64,
    #[serde(rename = "A")]
    pub a: u32,
    #[serde(rename = "B")]
    pub b: u64,
}

impl ClaimSpec {
    pub fn validate(&self) -> Result<(), String> {
        if !is_prime(self.p) {
            return Err(format!("p = {} is not prime", self.p));
        }
        if self.a == 0 || self.b == 0 {
            return Err("A and B must be at least 1".into());
        }
        if self.p.checked_pow(self.a).is_none() {
            return Err(format!("{}^{} overflows", self.p, self.a));
        }
        Ok(())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClaimsFile {
    #[serde(default)]
    claim: Vec<ClaimSpec>,
}

pub fn parse_claims_file(text: &str) -> Result<Vec<ClaimSpec>, FileError> {
    let file: ClaimsFile = toml::from_str(text)?;
    if file.claim.is_empty() {
        return Err(FileError::NoClaims);
    }
    for (index, claim) in file.claim.iter().enumerate() {
        claim
            .validate()
            .map_err(|reason| FileError::BadClaim { index, reason })?;
    }
    Ok(file.claim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi12_round_trip() {
        let chi = parse_chi_file("period = 12\nvalues = [0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]\n").unwrap();
        assert_eq!(chi, PeriodicChi::chi12());
    }

    #[test]
    fn chi_file_errors() {
        assert!(parse_chi_file("period = 3\nvalues = [1, -1]").is_err());
        assert!(parse_chi_file("period = 2\nvalues = [1, 1]").is_err());
        assert!(parse_chi_file("period = 2\nvalues = [1.5, -1.5]").is_err());
        assert!(parse_chi_file("values = [").is_err());
    }

    #[test]
    fn claims() {
        let claims = parse_claims_file("[[claim]]\np = 5\nA = 2\nB = 1\n[[claim]]\np = 7\nA = 1\nB = 1\n").unwrap();
        assert_eq!(
            claims,
            vec![ClaimSpec { p: 5, a: 2, b: 1 }, ClaimSpec { p: 7, a: 1, b: 1 }]
        );
        assert!(matches!(parse_claims_file(""), Err(FileError::NoClaims)));
        assert!(matches!(
            parse_claims_file("[[claim]]\np = 6\nA = 1\nB = 1\n"),
            Err(FileError::BadClaim { index: 0, .. })
        ));
        assert!(parse_claims_file("[[claim]]\np = 5\nA = 1\nB = 1\nC = 2\n").is_err());
        assert!(parse_claims_file("[[claim]]\np = 5\nA = 0\nB = 1\n").is_err());
        assert!(parse_claims_file("[[claim]]\np = 3\nA = 60\nB = 1\n").is_err());
    }
}
