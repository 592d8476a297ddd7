//! Every congruence the predictor emits holds on the computed range.

use num_bigint::BigInt;
use qmf_core::arith::Rational;
use qmf_core::congruence::{predict, verify_claim, ClaimStatus};
use qmf_core::habiro::{fishburn, hikami_sequence};
use qmf_core::lfunc::{h_sequence, ThetaDatum};

fn assert_all_claims_hold(d: &ThetaDatum, seq: &[BigInt], pmax: u64) -> usize {
    let mut claims = predict(d, pmax).unwrap();
    let mut tested = 0;
    for claim in &mut claims {
        if claim.p.saturating_sub(claim.b) >= seq.len() as u64 {
            continue;
        }
        verify_claim(claim, seq, 4).unwrap();
        assert_eq!(claim.status, ClaimStatus::Verified, "a={} b={} {claim:?}", d.a(), d.b());
        tested += 1;
    }
    tested
}

#[test]
fn fishburn_claims_hold() {
    let xi = fishburn(300).unwrap();
    assert!(assert_all_claims_hold(&ThetaDatum::fishburn(), &xi, 300) > 40);
}

#[test]
fn hikami_claims_hold() {
    for (m, alpha) in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
        let xi = hikami_sequence(m, alpha, 120).unwrap();
        let tested = assert_all_claims_hold(&ThetaDatum::hikami(m, alpha).unwrap(), &xi, 120);
        assert!(tested > 0, "(m, α) = ({m}, {alpha})");
    }
}

#[test]
fn claims_hold_on_l_value_coefficients() {
    let d = ThetaDatum::fishburn();
    let h = h_sequence(&d, 60);
    let mut claims = predict(&d, 60).unwrap();
    for claim in &mut claims {
        if claim.p.saturating_sub(claim.b) >= 60 {
            continue;
        }
        verify_claim(claim, &h.values, 3).unwrap();
        assert_eq!(claim.status, ClaimStatus::Verified, "{claim:?}");
    }
    assert!(h.values.iter().all(|v: &Rational| v.is_integer()));
}
