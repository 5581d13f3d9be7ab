#![no_main]

use libfuzzer_sys::fuzz_target;
use spanner_core::io;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = io::parse_graph(text) {
        let again = io::parse_graph(&io::graph_to_json(&g)).expect("re-parse");
        assert_eq!(again.edges(), g.edges());
        assert_eq!(again.points(), g.points());
        assert_eq!(again.steiner_mask(), g.steiner_mask());
    }
});
