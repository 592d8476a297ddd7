#![no_main]

use libfuzzer_sys::fuzz_target;
use qmf_cli::cache::parse_cache;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        // Anything accepted must render back to itself.
        if let Ok(entry) = parse_cache(text) {
            assert_eq!(entry.render(), text);
        }
    }
});
