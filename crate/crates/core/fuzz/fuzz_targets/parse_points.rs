#![no_main]

use libfuzzer_sys::fuzz_target;
use spanner_core::io;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(set) = io::parse_points(text) {
        // whatever parses must survive a round trip unchanged
        let again = io::parse_points(&io::points_to_json(&set)).expect("re-parse");
        assert_eq!(again, set);
    }
});
