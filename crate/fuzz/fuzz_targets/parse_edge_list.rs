#![no_main]
use libfuzzer_sys::fuzz_target;
use sombor_core::edgelist::{parse_edge_list, write_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(tree) = parse_edge_list(text) {
        assert_eq!(tree.edge_count() + 1, tree.order());
        // Accepted input re-serializes to a canonical form that parses back
        // to the same tree.
        let again = parse_edge_list(&write_edge_list(&tree)).unwrap();
        assert_eq!(again, tree);
    }
});
