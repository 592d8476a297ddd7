#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(claims) = qmf_cli::files::parse_claims_file(text) {
            assert!(!claims.is_empty());
            assert!(claims.iter().all(|c| c.validate().is_ok()));
        }
    }
});
