//! The extremal tree, its closed-form Sombor index, structural
//! classification into the star-based families, and the scalar
//! inequalities the rewiring arguments rely on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// A feasible pair `(n, alpha)` with `ceil(n/2) <= alpha <= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtremalParams {
    order: usize,
    alpha: usize,
}

/// Independence numbers a tree of order `n >= 2` can have.
pub fn feasible_alpha(order: usize) -> RangeInclusive<usize> {
    order.div_ceil(2)..=order.saturating_sub(1)
}

impl ExtremalParams {
    pub fn new(order: usize, alpha: usize) -> Result<ExtremalParams> {
        let range = feasible_alpha(order);
        if order < 2 || !range.contains(&alpha) {
            return Err(Error::Infeasible {
                order,
                alpha,
                min: *range.start(),
                max: *range.end(),
            });
        }
        Ok(ExtremalParams { order, alpha })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Pendants hung directly on the center: `2 alpha - (n - 1)`.
    pub fn center_pendants(&self) -> usize {
        2 * self.alpha + 1 - self.order
    }

    /// Two-edge arms leaving the center: `n - (alpha + 1)`.
    pub fn arms(&self) -> usize {
        self.order - self.alpha - 1
    }
}

/// Builds the extremal tree: center 0, arm vertices `1..=k`, their pendants
/// `k+1..=2k`, then the center's own pendants, where `k` is the number of
/// arms. With `alpha = n - 1` this is the star.
pub fn construct_t_star(params: &ExtremalParams) -> Tree {
    let arms = params.arms();
    let mut edges = Vec::with_capacity(params.order - 1);
    for i in 1..=arms {
        edges.push((0, i));
        edges.push((i, i + arms));
    }
    for p in 2 * arms + 1..params.order {
        edges.push((0, p));
    }
    Tree::from_edges(params.order, &edges).expect("extremal construction is a tree")
}

/// `(2a - (n-1)) sqrt(a^2 + 1) + (n - (a+1)) (sqrt(a^2 + 4) + sqrt(5))`.
pub fn closed_form_max(params: &ExtremalParams) -> f64 {
    let a = params.alpha as f64;
    params.center_pendants() as f64 * (a * a + 1.0).sqrt()
        + params.arms() as f64 * ((a * a + 4.0).sqrt() + 5f64.sqrt())
}

/// Family labels. `TStar` trees also belong to `T1`; see
/// [`TreeClass::is_t1`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeClass {
    Star,
    TStar,
    T1,
    T2,
    Other,
}

impl TreeClass {
    pub fn is_t1(self) -> bool {
        matches!(self, TreeClass::T1 | TreeClass::TStar)
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeClass::Star => "Star",
            TreeClass::TStar => "TStar",
            TreeClass::T1 => "T1",
            TreeClass::T2 => "T2",
            TreeClass::Other => "Other",
        })
    }
}

/// The pendant-stripped residue of a tree when it is a star, together with
/// how many pendants each residue vertex carries in the full tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarResidue {
    /// Residue center (original id). For a two-vertex residue this is the
    /// endpoint carrying more pendants, ties to the smaller id.
    pub center: usize,
    /// Residue leaves (original ids), ascending.
    pub leaves: Vec<usize>,
    /// Pendant count per original vertex id.
    pub pendant_count: Vec<usize>,
}

/// Returns the residue decomposition when stripping pendants from `tree`
/// leaves a star on at least two vertices.
pub fn star_residue(tree: &Tree) -> Option<StarResidue> {
    if tree.order() < 3 {
        return None;
    }
    let stripped = tree.strip_pendants().ok()?;
    let residue = &stripped.tree;
    let r = residue.order();
    if r < 2 {
        return None;
    }
    let local_center = (0..r).find(|&v| residue.neighbors(v).len() == r - 1)?;

    let mut pendant_count = vec![0; tree.order()];
    for p in tree.pendant_vertices() {
        pendant_count[tree.neighbors(p)[0]] += 1;
    }
    let ids = &stripped.original_ids;
    let mut center = ids[local_center];
    if r == 2 {
        let (a, b) = (ids[0], ids[1]);
        center = if pendant_count[b] > pendant_count[a] {
            b
        } else {
            a
        };
    }
    let leaves = ids.iter().copied().filter(|&v| v != center).collect();
    Some(StarResidue {
        center,
        leaves,
        pendant_count,
    })
}

/// Structural classification.
///
/// Stripping the pendants must leave a star: a single vertex means the tree
/// is itself a star. Otherwise every residue leaf carries a pendant; the
/// tree is `T1` when the residue center does too and `T2` when it carries
/// none (never emitted when `alpha = n/2`). A `T1` tree whose residue leaves
/// carry exactly one pendant each is `TStar`.
pub fn classify(tree: &Tree) -> TreeClass {
    let n = tree.order();
    if n <= 2 {
        return TreeClass::Star;
    }
    if tree.strip_pendants().map(|s| s.tree.order()) == Ok(1) {
        return TreeClass::Star;
    }
    let Some(residue) = star_residue(tree) else {
        return TreeClass::Other;
    };
    let counts = &residue.pendant_count;
    if residue.leaves.iter().any(|&l| counts[l] == 0) {
        return TreeClass::Other;
    }
    if counts[residue.center] == 0 {
        let pendants: usize = residue.leaves.iter().map(|&l| counts[l]).sum();
        let alpha = pendants + 1;
        return if 2 * alpha == n {
            TreeClass::Other
        } else {
            TreeClass::T2
        };
    }
    if residue.leaves.iter().all(|&l| counts[l] == 1) {
        TreeClass::TStar
    } else {
        TreeClass::T1
    }
}

/// Every member of the first star family for `(n, alpha)` up to
/// isomorphism: a star on `n - alpha` vertices with at least one pendant on
/// every vertex, `alpha` pendants in total. Empty when `n - alpha < 2`.
pub fn t1_family(params: &ExtremalParams) -> Vec<Tree> {
    let r = params.order - params.alpha;
    if r < 2 {
        return Vec::new();
    }
    let mut out = BTreeMap::new();
    for center in 1..=params.alpha - (r - 1) {
        for loads in partitions(params.alpha - center, r - 1) {
            let tree = loaded_star(Some(center), &loads);
            out.entry(tree.canonical_code()).or_insert(tree);
        }
    }
    out.into_values().collect()
}

/// Every member of the second star family for `(n, alpha)` up to
/// isomorphism: a star on `n - alpha + 1` vertices whose center carries no
/// pendant and whose leaves carry at least one each, `alpha - 1` pendants
/// in total. Empty when that shape cannot exist or `alpha = n/2`.
pub fn t2_family(params: &ExtremalParams) -> Vec<Tree> {
    let r = params.order + 1 - params.alpha;
    if r < 3 || 2 * params.alpha == params.order || params.alpha - 1 < r - 1 {
        return Vec::new();
    }
    let mut out = BTreeMap::new();
    for loads in partitions(params.alpha - 1, r - 1) {
        let tree = loaded_star(None, &loads);
        out.entry(tree.canonical_code()).or_insert(tree);
    }
    out.into_values().collect()
}

/// Star with center 0 and one leaf per entry of `leaf_loads`, each leaf
/// carrying that many pendants; the center carries `center_load` pendants.
fn loaded_star(center_load: Option<usize>, leaf_loads: &[usize]) -> Tree {
    let mut edges = Vec::new();
    let mut next = 1 + leaf_loads.len();
    for (i, &load) in leaf_loads.iter().enumerate() {
        edges.push((0, i + 1));
        for _ in 0..load {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    for _ in 0..center_load.unwrap_or(0) {
        edges.push((0, next));
        next += 1;
    }
    Tree::from_edges(next, &edges).expect("loaded star is a tree")
}

/// Non-increasing sequences of `parts` positive integers summing to `total`.
fn partitions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(
        total: usize,
        parts: usize,
        max: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total < parts {
            return;
        }
        for first in (1..=max.min(total - (parts - 1))).rev() {
            prefix.push(first);
            go(total - first, parts - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, total, &mut Vec::new(), &mut out);
    out
}

/// `sqrt((x + c)^2 + d^2) - sqrt(x^2 + d^2)`; increasing in `x`.
pub fn endpoint_gain(x: f64, c: u32, d: u32) -> f64 {
    let (c, d) = (f64::from(c), f64::from(d));
    ((x + c).powi(2) + d * d).sqrt() - (x * x + d * d).sqrt()
}

/// `sqrt(c^2 + x^2) - sqrt(d^2 + x^2)` for `c > d`; positive and
/// decreasing in `x`.
pub fn partner_gap(x: f64, c: u32, d: u32) -> Result<f64> {
    if c <= d {
        return Err(Error::GapOrder { c, d });
    }
    let (c, d) = (f64::from(c), f64::from(d));
    Ok((c * c + x * x).sqrt() - (d * d + x * x).sqrt())
}

/// Exact check of `(r + k)^2 + 1 >= r^2 + (k + 1)^2`: absorbing `k`
/// pendants from a residue leaf into a center of residue degree `r` never
/// lowers the edge term involved.
pub fn center_absorb_inequality(residue_order: u64, k: u64) -> bool {
    let (r, k) = (u128::from(residue_order), u128::from(k));
    (r + k).pow(2) + 1 >= r * r + (k + 1).pow(2)
}

/// Exact check of `(l + k)^2 + 4 >= (l + 1)^2 + (k + 1)^2`, equivalently
/// `lk + 1 >= l + k`.
pub fn arm_trim_inequality(l: u64, k: u64) -> bool {
    let (l, k) = (u128::from(l), u128::from(k));
    (l + k).pow(2) + 4 >= (l + 1).pow(2) + (k + 1).pow(2)
}
