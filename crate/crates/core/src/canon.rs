//! Center-rooted AHU encoding of free trees.

use std::fmt;

use crate::tree::Tree;

/// Balanced-parenthesis code of a tree rooted at its center, children
/// sorted. Two trees share a code exactly when they are isomorphic, and
/// codes are totally ordered (bytewise, `(` before `)`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("codes are ASCII parentheses")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn canonical_code(tree: &Tree) -> CanonicalCode {
    let code = tree
        .center()
        .into_iter()
        .map(|root| rooted_code(tree, root))
        .min()
        .expect("every tree has a center");
    CanonicalCode(code)
}

/// AHU code of `tree` rooted at `root`, built bottom-up without recursion.
pub(crate) fn rooted_code(tree: &Tree, root: usize) -> Vec<u8> {
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }

    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut root_code = Vec::new();
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut child_codes[v]);
        children.sort_unstable();
        let len = 2 + children.iter().map(Vec::len).sum::<usize>();
        let mut code = Vec::with_capacity(len);
        code.push(b'(');
        for child in children {
            code.extend_from_slice(&child);
        }
        code.push(b')');
        if v == root {
            root_code = code;
        } else {
            child_codes[parent[v]].push(code);
        }
    }
    root_code
}
