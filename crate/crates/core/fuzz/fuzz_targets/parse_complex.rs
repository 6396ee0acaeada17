#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(z) = delay_dd::harness::parse_complex(text) {
            assert!(z.is_finite());
        }
    }
});
