#![no_main]

use libfuzzer_sys::fuzz_target;
use spanner_core::io;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(grid) = io::parse_grid(text) {
        let again = io::parse_grid(&io::grid_to_json(&grid)).expect("re-parse");
        assert_eq!(again, grid);
    }
});
