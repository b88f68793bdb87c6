#![no_main]
use libfuzzer_sys::fuzz_target;
use sombor_core::edgelist::{parse_edge_lists, write_edge_lists};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(trees) = parse_edge_lists(text) {
        let again = parse_edge_lists(&write_edge_lists(&trees)).unwrap();
        assert_eq!(again, trees);
    }
});
