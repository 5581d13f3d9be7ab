#![no_main]

use libfuzzer_sys::fuzz_target;
use spanner_core::io;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = io::parse_document(text) {
        let _ = io::parse_document(&io::document_to_json(&doc)).expect("re-parse");
    }
});
