//! Sombor index, independence number and pendant-first independent sets.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Largest order accepted by [`independence_number_oracle`].
pub const ORACLE_MAX_ORDER: usize = 24;

/// Contribution of one edge whose endpoints have degrees `du` and `dv`.
pub fn edge_term(du: usize, dv: usize) -> f64 {
    ((du * du + dv * dv) as f64).sqrt()
}

/// Sum over all edges `uv` of `sqrt(d(u)^2 + d(v)^2)`, accumulated in
/// lexicographic edge order.
pub fn sombor_index(tree: &Tree) -> f64 {
    let degrees = tree.degrees();
    tree.edges()
        .map(|(u, v)| edge_term(degrees[u], degrees[v]))
        .sum()
}

/// Independence number by the include/exclude dynamic program over the
/// tree rooted at vertex 0.
pub fn independence_number(tree: &Tree) -> usize {
    let parent = tree.parents_from(0);
    let mut order = Vec::with_capacity(tree.order());
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        order.extend(
            tree.neighbors(u)
                .iter()
                .filter(|&&w| parent[w] == u && w != u),
        );
    }

    // with[v]: best in v's subtree using v; without[v]: best not using v.
    let mut with = vec![1usize; tree.order()];
    let mut without = vec![0usize; tree.order()];
    for &v in order.iter().rev() {
        if v == 0 {
            break;
        }
        let p = parent[v];
        with[p] += without[v];
        without[p] += with[v].max(without[v]);
    }
    with[0].max(without[0])
}

/// Independence number by checking every vertex subset. Refuses trees of
/// order above [`ORACLE_MAX_ORDER`].
pub fn independence_number_oracle(tree: &Tree) -> Result<usize> {
    let n = tree.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            order: n,
            cap: ORACLE_MAX_ORDER,
        });
    }
    let neighbor_masks: Vec<u32> = (0..n)
        .map(|v| tree.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let best = (0u32..1 << n)
        .filter(|&subset| (0..n).all(|v| subset & (1 << v) == 0 || subset & neighbor_masks[v] == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0);
    Ok(best as usize)
}

/// A set of pairwise non-adjacent vertices of a particular tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSet {
    members: Vec<usize>,
    host_order: usize,
}

impl IndependentSet {
    /// Checks `members` against `tree`; duplicates are dropped.
    pub fn new(tree: &Tree, mut members: Vec<usize>) -> Result<IndependentSet> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= tree.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: tree.order(),
            });
        }
        for &v in &members {
            if let Some(&w) = tree
                .neighbors(v)
                .iter()
                .find(|w| members.binary_search(w).is_ok())
            {
                return Err(Error::Precondition(format!(
                    "vertices {v} and {w} are adjacent"
                )));
            }
        }
        Ok(IndependentSet {
            members,
            host_order: tree.order(),
        })
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }
}

/// Builds a maximum independent set that contains every pendant vertex.
///
/// Rounds repeat until no vertex is left: take the vertices of current
/// degree at most one in ascending id order, add each that is still
/// present, and delete it together with its remaining neighbor.
pub fn pendant_inclusive_mis(tree: &Tree) -> IndependentSet {
    let n = tree.order();
    let mut alive = vec![true; n];
    let mut degree = tree.degrees();
    let mut remaining = n;
    let mut members = Vec::new();

    let remove = |v: usize, alive: &mut [bool], degree: &mut [usize]| {
        alive[v] = false;
        for &w in tree.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    };

    while remaining > 0 {
        let round: Vec<usize> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
        for v in round {
            if !alive[v] {
                continue;
            }
            members.push(v);
            let support = tree.neighbors(v).iter().copied().find(|&w| alive[w]);
            remove(v, &mut alive, &mut degree);
            remaining -= 1;
            if let Some(s) = support {
                remove(s, &mut alive, &mut degree);
                remaining -= 1;
            }
        }
    }

    IndependentSet::new(tree, members).expect("the stripping procedure yields an independent set")
}
