#![no_main]

use libfuzzer_sys::fuzz_target;

// The CSV reader is the only surface that consumes untrusted bytes: it must
// never panic, and anything it accepts must satisfy the grid invariants.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(grid) = monotonicity::io::parse_csv_grid(text) {
        assert!(!grid.values.is_empty());
        assert!(grid.values.iter().all(|v| v.is_finite()));
        if let Some(domain) = grid.inferred_domain {
            assert!(domain.is_finite() && domain > 0.0);
        }
    }
});
