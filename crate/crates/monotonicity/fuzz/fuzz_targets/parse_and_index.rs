#![no_main]

use libfuzzer_sys::fuzz_target;
use monotonicity::{
    brute_force_index_i, cumulative_pair, index_i_unit, index_l_unit, GridFunction,
};

// Drives parsed input through the whole index pipeline. Index laws are only
// asserted for moderate magnitudes, where f64 sums cannot overflow.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parsed) = monotonicity::io::parse_csv_grid(text) else {
        return;
    };
    let domain = parsed.inferred_domain.unwrap_or(1.0);
    let Ok(grid) = GridFunction::new(parsed.values, domain, Default::default()) else {
        return;
    };

    let i = index_i_unit(&grid);
    let l = index_l_unit(&grid);
    let pair = cumulative_pair(&grid);
    assert_eq!(pair.cumulative().len(), grid.len() + 1);

    if grid.values().iter().all(|v| v.abs() <= 1e100) {
        assert!(i >= 0.0);
        assert!(l <= i);
        if grid.len() <= 12 {
            let brute = brute_force_index_i(&grid).unwrap();
            let scale = brute.abs().max(i.abs()).max(1.0);
            assert!((brute - i).abs() <= 1e-9 * scale);
        }
    }
});
