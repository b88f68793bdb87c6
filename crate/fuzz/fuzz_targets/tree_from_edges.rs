//! Builds a tree from raw bytes: the first byte is the order, every
//! following pair of bytes is an edge.

#![no_main]
use libfuzzer_sys::fuzz_target;
use sombor_core::invariants::{independence_number, independence_number_oracle, sombor_index};
use sombor_core::Tree;

const ORACLE_ORDER: usize = 16;

fuzz_target!(|data: &[u8]| {
    let Some((&order, rest)) = data.split_first() else {
        return;
    };
    let order = usize::from(order);
    let edges: Vec<(usize, usize)> = rest
        .chunks_exact(2)
        .map(|e| (usize::from(e[0]), usize::from(e[1])))
        .collect();
    let Ok(tree) = Tree::from_edges(order, &edges) else {
        return;
    };
    assert!(sombor_index(&tree).is_finite());
    let code = tree.canonical_code();
    let reversed: Vec<usize> = (0..order).rev().collect();
    assert_eq!(tree.relabel(&reversed).canonical_code(), code);
    if order <= ORACLE_ORDER {
        assert_eq!(
            independence_number(&tree),
            independence_number_oracle(&tree).unwrap()
        );
    }
});
