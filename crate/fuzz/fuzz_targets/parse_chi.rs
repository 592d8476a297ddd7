#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(chi) = qmf_cli::files::parse_chi_file(text) {
            assert_eq!(chi.values().len(), chi.period());
            assert_eq!(chi.values().iter().sum::<i64>(), 0);
        }
    }
});
