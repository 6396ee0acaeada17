#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = delay_dd::harness::parse_spec(text) {
            // an accepted spec must build every grid and partition it names
            spec.problem().unwrap();
            for &n in &spec.subdomains {
                let grid = spec.grid_for(n).unwrap();
                spec.partition_for(&grid, n).unwrap();
            }
            assert!(!spec.runs().is_empty());
        }
    }
});
