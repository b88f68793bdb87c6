//! Non-isomorphic free trees of a given order.
//!
//! The fast path walks level sequences in the Wright–Richmond–Odlyzko–McKay
//! order: rooted trees are produced by the Beyer–Hedetniemi successor rule,
//! and only sequences that are canonical for a free tree rooted at its
//! center are kept, with jumps over whole blocks of non-canonical ones.
//! [`reference`] holds two slow generators used to cross-check it.

use crate::error::{Error, Result};
use crate::invariants::independence_number;
use crate::tree::Tree;

/// Largest order [`enumerate_free_trees`] accepts.
pub const DEFAULT_CAP: usize = 20;

/// Streaming iterator over one representative of each isomorphism class of
/// trees on `n` vertices, in a fixed deterministic order.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    state: State,
}

#[derive(Debug, Clone)]
enum State {
    Single,
    Candidate(Vec<usize>),
    Done,
}

pub fn enumerate_free_trees(order: usize) -> Result<FreeTrees> {
    FreeTrees::with_cap(order, DEFAULT_CAP)
}

impl FreeTrees {
    pub fn with_cap(order: usize, cap: usize) -> Result<FreeTrees> {
        if order > cap {
            return Err(Error::TooLarge { order, cap });
        }
        let state = match order {
            0 => return Err(Error::Domain("a tree needs at least one vertex")),
            1 => State::Single,
            n => State::Candidate((0..=n / 2).chain(1..n.div_ceil(2)).collect()),
        };
        Ok(FreeTrees { state })
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        match std::mem::replace(&mut self.state, State::Done) {
            State::Done => None,
            State::Single => Some(Tree::path(1)),
            State::Candidate(mut layout) => loop {
                let m = split_point(&layout);
                if is_free_canonical(&layout, m) {
                    let tree = layout_to_tree(&layout);
                    if let Some(next) = next_rooted(&layout, None) {
                        self.state = State::Candidate(next);
                    }
                    return Some(tree);
                }
                layout = jump(&layout, m)?;
            },
        }
    }
}

/// Index of the second child of the root (the first vertex at level 1
/// after the leftmost subtree), or the length when the root has one child.
fn split_point(layout: &[usize]) -> usize {
    layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &level)| level == 1)
        .map_or(layout.len(), |(i, _)| i)
}

/// A level sequence rooted at the center is canonical for its free tree
/// when the leftmost root subtree is no taller than the rest and, at equal
/// height, is no larger and not lexicographically later.
fn is_free_canonical(layout: &[usize], m: usize) -> bool {
    let left = &layout[1..m];
    let left_height = left.iter().max().map_or(0, |h| h - 1);
    let rest_height = layout[m..].iter().copied().max().unwrap_or(0);
    if rest_height != left_height {
        return rest_height > left_height;
    }
    let rest_len = layout.len() - m + 1;
    if left.len() != rest_len {
        return left.len() < rest_len;
    }
    // Compare the shifted left subtree with [0] ++ rest.
    let shifted = left.iter().map(|h| h - 1);
    let rest = std::iter::once(0).chain(layout[m..].iter().copied());
    shifted.le(rest)
}

/// Skips from a non-canonical sequence to the next candidate.
fn jump(layout: &[usize], m: usize) -> Option<Vec<usize>> {
    let p = m - 1;
    let mut next = next_rooted(layout, Some(p))?;
    if layout[p] > 2 {
        let m2 = split_point(&next);
        let left_height = next[1..m2].iter().max().map_or(0, |h| h - 1);
        let len = next.len();
        for (slot, level) in next[len - left_height - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

/// Beyer–Hedetniemi successor of a rooted level sequence, optionally
/// forcing the pivot position.
fn next_rooted(layout: &[usize], pivot: Option<usize>) -> Option<Vec<usize>> {
    let p = match pivot {
        Some(p) => p,
        None => layout.iter().rposition(|&level| level != 1)?,
    };
    if p == 0 {
        return None;
    }
    let q = (0..p).rev().find(|&q| layout[q] + 1 == layout[p])?;
    let mut next = layout.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Builds the tree whose preorder level sequence is `layout`; vertex `i`
/// is the `i`-th vertex in preorder.
pub(crate) fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut stack: Vec<usize> = Vec::with_capacity(layout.len());
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] < level {
                edges.push((top, i));
                break;
            }
            stack.pop();
        }
        stack.push(i);
    }
    Tree::from_edges(layout.len(), &edges).expect("a level sequence describes a tree")
}

/// Order plus optional independence-number filter selecting a family of
/// free trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeFamilyQuery {
    pub order: usize,
    pub alpha: Option<usize>,
}

impl TreeFamilyQuery {
    pub fn all(order: usize) -> Self {
        TreeFamilyQuery { order, alpha: None }
    }

    pub fn with_alpha(order: usize, alpha: usize) -> Self {
        TreeFamilyQuery {
            order,
            alpha: Some(alpha),
        }
    }
}

/// Free trees of the queried order whose independence number matches the
/// filter. Infeasible filters give an empty stream.
pub fn enumerate_family(query: TreeFamilyQuery) -> Result<impl Iterator<Item = Tree>> {
    enumerate_family_with_cap(query, DEFAULT_CAP)
}

pub fn enumerate_family_with_cap(
    query: TreeFamilyQuery,
    cap: usize,
) -> Result<impl Iterator<Item = Tree>> {
    let trees = FreeTrees::with_cap(query.order, cap)?;
    let feasible = query
        .alpha
        .is_none_or(|a| a >= query.order.div_ceil(2) && a <= query.order);
    Ok(feasible
        .then_some(trees)
        .into_iter()
        .flatten()
        .filter(move |t| query.alpha.is_none_or(|a| independence_number(t) == a)))
}

/// Slow generators kept as independent oracles for [`FreeTrees`].
pub mod reference {
    use std::collections::BTreeMap;

    use super::{layout_to_tree, next_rooted};
    use crate::canon::CanonicalCode;
    use crate::tree::Tree;

    /// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into the
    /// labeled tree it encodes.
    pub fn tree_from_prufer(order: usize, sequence: &[usize]) -> Tree {
        assert!(order >= 1);
        if order == 1 {
            return Tree::path(1);
        }
        assert_eq!(sequence.len(), order - 2);
        let mut degree = vec![1usize; order];
        for &s in sequence {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(order - 1);
        let mut ptr = (0..order).find(|&v| degree[v] == 1).unwrap();
        let mut leaf = ptr;
        for &s in sequence {
            edges.push((leaf, s));
            degree[s] -= 1;
            if degree[s] == 1 && s < ptr {
                leaf = s;
            } else {
                ptr = (ptr + 1..order).find(|&v| degree[v] == 1).unwrap();
                leaf = ptr;
            }
        }
        edges.push((leaf, order - 1));
        Tree::from_edges(order, &edges).expect("Prüfer decoding yields a tree")
    }

    /// Calls `visit` on each of the `n^(n-2)` labeled trees on `0..n`.
    pub fn for_each_labeled_tree(order: usize, mut visit: impl FnMut(&Tree)) {
        if order <= 2 {
            visit(&tree_from_prufer(order, &[]));
            return;
        }
        let mut sequence = vec![0usize; order - 2];
        loop {
            visit(&tree_from_prufer(order, &sequence));
            let Some(i) = sequence.iter().rposition(|&s| s + 1 < order) else {
                return;
            };
            sequence[i] += 1;
            sequence[i + 1..].fill(0);
        }
    }

    /// Free trees obtained by deduplicating every labeled tree by canonical
    /// code, sorted by code.
    pub fn free_trees_by_prufer(order: usize) -> Vec<Tree> {
        let mut classes = BTreeMap::<CanonicalCode, Tree>::new();
        for_each_labeled_tree(order, |t| {
            classes
                .entry(t.canonical_code())
                .or_insert_with(|| t.clone());
        });
        classes.into_values().collect()
    }

    /// Free trees obtained by deduplicating every rooted tree (all
    /// Beyer–Hedetniemi level sequences) by canonical code, sorted by code.
    pub fn free_trees_by_rooted(order: usize) -> Vec<Tree> {
        assert!(order >= 1);
        let mut classes = BTreeMap::<CanonicalCode, Tree>::new();
        let mut layout: Option<Vec<usize>> = Some((0..order).collect());
        while let Some(current) = layout {
            let tree = layout_to_tree(&current);
            classes.entry(tree.canonical_code()).or_insert(tree);
            layout = next_rooted(&current, None);
        }
        classes.into_values().collect()
    }
}
