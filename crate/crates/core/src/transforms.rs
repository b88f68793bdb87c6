//! Edge rewirings that strictly raise the Sombor index while keeping the
//! independence number, each checked against its local preconditions.
//!
//! Three moves drive any tree toward the extremal one:
//!
//! * [`apply_pair_case`] works on a tree outside both star families. It
//!   picks two support vertices of the pendant-stripped tree at maximum
//!   distance and moves branches from one to the other, possibly after
//!   exchanging their neighbors toward each other.
//! * [`absorb_leaf_pendants`] turns a member of the second star family
//!   into a member of the first by moving one residue leaf's pendants onto
//!   the residue center.
//! * [`trim_arm`] takes a member of the first family that is not yet
//!   extremal and moves all but one pendant of a heavy residue leaf onto
//!   the center.

use std::fmt;

use crate::error::{Error, Result};
use crate::extremal::{classify, star_residue, TreeClass};
use crate::tree::Tree;

/// Re-attach `moved` (neighbors of `donor`) to `receiver`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSpec {
    pub donor: usize,
    pub receiver: usize,
    pub moved: Vec<usize>,
}

/// Deletes `donor - w` and adds `receiver - w` for every `w` in
/// `spec.moved`.
pub fn shift_neighbors(tree: &Tree, spec: &ShiftSpec) -> Result<Tree> {
    let n = tree.order();
    for &v in [spec.donor, spec.receiver].iter().chain(&spec.moved) {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
    }
    if spec.donor == spec.receiver {
        return Err(Error::Precondition("donor and receiver coincide".into()));
    }
    let mut moved = spec.moved.clone();
    moved.sort_unstable();
    if moved.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("moved vertices repeat".into()));
    }
    if let Some(&w) = moved
        .iter()
        .find(|&&w| w == spec.receiver || !tree.is_adjacent(spec.donor, w))
    {
        return Err(Error::Precondition(format!(
            "vertex {w} is not a movable neighbor of donor {}",
            spec.donor
        )));
    }

    let is_moved = |w: usize| moved.binary_search(&w).is_ok();
    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .filter(|&(a, b)| !((a == spec.donor && is_moved(b)) || (b == spec.donor && is_moved(a))))
        .collect();
    edges.extend(moved.iter().map(|&w| (spec.receiver, w)));
    Ok(Tree::from_edges(n, &edges)?)
}

/// Replaces the edges `u - x` and `v - y` by `u - y` and `v - x`.
pub fn swap_endpoints(tree: &Tree, u: usize, x: usize, v: usize, y: usize) -> Result<Tree> {
    let n = tree.order();
    for w in [u, x, v, y] {
        if w >= n {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                order: n,
            });
        }
    }
    let ids = [u, x, v, y];
    if (0..4).any(|i| (i + 1..4).any(|j| ids[i] == ids[j])) {
        return Err(Error::Precondition(
            "swap endpoints must be distinct".into(),
        ));
    }
    if !tree.is_adjacent(u, x) || !tree.is_adjacent(v, y) {
        return Err(Error::Precondition(format!(
            "{u}-{x} and {v}-{y} must both be edges"
        )));
    }
    let same =
        |(a, b): (usize, usize), (c, d): (usize, usize)| (a, b) == (c, d) || (a, b) == (d, c);
    let mut edges: Vec<_> = tree
        .edges()
        .filter(|&e| !same(e, (u, x)) && !same(e, (v, y)))
        .collect();
    edges.push((u, y));
    edges.push((v, x));
    Ok(Tree::from_edges(n, &edges)?)
}

/// Two support vertices of the pendant-stripped tree at maximum distance
/// from each other, returned as original ids `(u, v)` with `u < v`. Ties go
/// to the lexicographically smallest pair.
pub fn select_support_pair(tree: &Tree) -> Result<(usize, usize)> {
    let stripped = tree.strip_pendants()?;
    let residue = &stripped.tree;
    let supports: Vec<usize> = (0..residue.order())
        .filter(|&s| {
            residue
                .neighbors(s)
                .iter()
                .any(|&w| residue.neighbors(w).len() == 1)
        })
        .collect();
    if supports.len() < 2 {
        return Err(Error::Domain(
            "the stripped tree has fewer than two support vertices",
        ));
    }

    let mut best: Option<(usize, (usize, usize))> = None;
    for &s in &supports {
        let dist = residue.distances_from(s);
        for &t in &supports {
            let (a, b) = (stripped.original_ids[s], stripped.original_ids[t]);
            if a >= b {
                continue;
            }
            let candidate = (dist[t], (a, b));
            best = match best {
                Some((d, pair)) if d > candidate.0 || (d == candidate.0 && pair < candidate.1) => {
                    Some((d, pair))
                }
                _ => Some(candidate),
            };
        }
    }
    Ok(best.expect("at least two supports").1)
}

/// Which rewiring applies to the selected support pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairCase {
    /// Both carry pendants and `d(x) >= d(y)`: move the lighter end's
    /// branches and all but one of its pendants to the heavier end.
    BothLoaded,
    /// Both carry pendants and `d(y) > d(x)`: first exchange the two
    /// toward-neighbors, then move as in [`PairCase::BothLoaded`].
    BothLoadedCrossed,
    /// Exactly one end carries pendants: the bare end hands its branches
    /// to the loaded end.
    OneLoaded,
    /// Neither end carries pendants: `u` hands its branches to `v`.
    NoneLoaded,
}

impl fmt::Display for PairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairCase::BothLoaded => "both-loaded",
            PairCase::BothLoadedCrossed => "both-loaded-crossed",
            PairCase::OneLoaded => "one-loaded",
            PairCase::NoneLoaded => "none-loaded",
        })
    }
}

/// The selected support pair, oriented so that the case's rewiring always
/// reads the same way: for the loaded cases `d(u) >= d(v)` and `v` donates
/// to `u`; for [`PairCase::OneLoaded`] `u` is the bare end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDecomposition {
    pub case: PairCase,
    pub u: usize,
    pub v: usize,
    /// `u`'s neighbor on the path to `v` (equal to `v` when adjacent).
    pub x: usize,
    /// `v`'s neighbor on the path to `u` (equal to `u` when adjacent).
    pub y: usize,
    /// Non-pendant neighbors of `u` other than `x`, ascending.
    pub u_branches: Vec<usize>,
    /// Pendant neighbors of `u`, ascending.
    pub u_pendants: Vec<usize>,
    pub v_branches: Vec<usize>,
    pub v_pendants: Vec<usize>,
}

/// Locates and orients the support pair for a tree outside both star
/// families.
pub fn decompose_pair(tree: &Tree) -> Result<PairDecomposition> {
    let class = classify(tree);
    if class != TreeClass::Other {
        return Err(Error::Precondition(format!(
            "the tree lies in family {class}, not outside the star families"
        )));
    }
    let (u, v) = select_support_pair(tree)?;
    let path = tree.path_between(u, v)?;
    let (x, y) = (path[1], path[path.len() - 2]);

    let split = |center: usize, toward: usize| -> (Vec<usize>, Vec<usize>) {
        tree.neighbors(center)
            .iter()
            .copied()
            .filter(|&w| w != toward)
            .partition(|&w| tree.neighbors(w).len() > 1)
    };
    let (u_branches, u_pendants) = split(u, x);
    let (v_branches, v_pendants) = split(v, y);
    let mut d = PairDecomposition {
        case: PairCase::NoneLoaded,
        u,
        v,
        x,
        y,
        u_branches,
        u_pendants,
        v_branches,
        v_pendants,
    };

    for branches in [&d.u_branches, &d.v_branches] {
        if branches.is_empty() {
            return Err(Error::Precondition(
                "a selected support vertex has no branch besides the connecting path".into(),
            ));
        }
    }
    let (a, b) = (d.u_pendants.len(), d.v_pendants.len());
    let loaded_pair = a > 0 && b > 0;
    let flip = if loaded_pair {
        tree.neighbors(u).len() < tree.neighbors(v).len()
    } else {
        a > 0 && b == 0
    };
    if flip {
        d = PairDecomposition {
            case: d.case,
            u: d.v,
            v: d.u,
            x: d.y,
            y: d.x,
            u_branches: d.v_branches,
            u_pendants: d.v_pendants,
            v_branches: d.u_branches,
            v_pendants: d.u_pendants,
        };
    }
    d.case = match (d.u_pendants.len(), d.v_pendants.len()) {
        (0, 0) => PairCase::NoneLoaded,
        (0, _) => PairCase::OneLoaded,
        _ if tree.neighbors(d.x).len() >= tree.neighbors(d.y).len() => PairCase::BothLoaded,
        _ => PairCase::BothLoadedCrossed,
    };
    Ok(d)
}

/// Applies the rewiring for `case`, failing when the tree's support pair
/// falls into a different case.
pub fn apply_pair_case(tree: &Tree, case: PairCase) -> Result<Tree> {
    let d = decompose_pair(tree)?;
    if d.case != case {
        return Err(Error::Precondition(format!(
            "the support pair is in case {}, not {case}",
            d.case
        )));
    }
    rewire_pair(tree, &d)
}

/// Detects the applicable case and applies its rewiring.
pub fn apply_pair_step(tree: &Tree) -> Result<(PairCase, Tree)> {
    let d = decompose_pair(tree)?;
    Ok((d.case, rewire_pair(tree, &d)?))
}

fn rewire_pair(tree: &Tree, d: &PairDecomposition) -> Result<Tree> {
    match d.case {
        PairCase::BothLoaded | PairCase::BothLoadedCrossed => {
            // Adjacent supports (x = v, y = u) or a shared toward-neighbor
            // (x = y) leave nothing to exchange.
            let degenerate = d.x == d.y || d.x == d.v;
            let base = if d.case == PairCase::BothLoadedCrossed && !degenerate {
                swap_endpoints(tree, d.u, d.x, d.v, d.y)?
            } else {
                tree.clone()
            };
            // v keeps its last pendant.
            let mut moved = d.v_branches.clone();
            moved.extend_from_slice(&d.v_pendants[..d.v_pendants.len() - 1]);
            shift_neighbors(
                &base,
                &ShiftSpec {
                    donor: d.v,
                    receiver: d.u,
                    moved,
                },
            )
        }
        PairCase::OneLoaded | PairCase::NoneLoaded => shift_neighbors(
            tree,
            &ShiftSpec {
                donor: d.u,
                receiver: d.v,
                moved: d.u_branches.clone(),
            },
        ),
    }
}

/// Moves every pendant of the smallest residue leaf onto the residue
/// center of a second-family tree.
pub fn absorb_leaf_pendants(tree: &Tree) -> Result<Tree> {
    let class = classify(tree);
    if class != TreeClass::T2 {
        return Err(Error::Precondition(format!(
            "expected a tree of family T2, got {class}"
        )));
    }
    let residue = star_residue(tree).expect("T2 trees have a star residue");
    let leaf = residue.leaves[0];
    let moved = tree
        .neighbors(leaf)
        .iter()
        .copied()
        .filter(|&w| tree.neighbors(w).len() == 1)
        .collect();
    shift_neighbors(
        tree,
        &ShiftSpec {
            donor: leaf,
            receiver: residue.center,
            moved,
        },
    )
}

/// One trimming step on a first-family tree: the smallest residue leaf
/// carrying two or more pendants keeps its smallest pendant and hands the
/// rest to the residue center. Returns `Ok(None)` on the extremal tree.
pub fn trim_arm(tree: &Tree) -> Result<Option<Tree>> {
    match classify(tree) {
        TreeClass::TStar => return Ok(None),
        TreeClass::T1 => {}
        other => {
            return Err(Error::Precondition(format!(
                "expected a tree of family T1, got {other}"
            )))
        }
    }
    let residue = star_residue(tree).expect("T1 trees have a star residue");
    let leaf = *residue
        .leaves
        .iter()
        .find(|&&l| residue.pendant_count[l] >= 2)
        .expect("a non-extremal T1 tree has a heavy residue leaf");
    let moved = tree
        .neighbors(leaf)
        .iter()
        .copied()
        .filter(|&w| tree.neighbors(w).len() == 1)
        .skip(1)
        .collect();
    shift_neighbors(
        tree,
        &ShiftSpec {
            donor: leaf,
            receiver: residue.center,
            moved,
        },
    )
    .map(Some)
}

/// Applies [`trim_arm`] until the extremal tree is reached; returns it with
/// the number of steps taken.
pub fn trim_to_fixed_point(tree: &Tree) -> Result<(Tree, usize)> {
    let mut current = tree.clone();
    let mut steps = 0;
    while let Some(next) = trim_arm(&current)? {
        current = next;
        steps += 1;
    }
    Ok((current, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::StructureError;
    use crate::extremal::{construct_t_star, ExtremalParams};
    use crate::invariants::{independence_number, sombor_index};

    fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
        Tree::from_edges(n, edges).unwrap()
    }

    #[test]
    fn shift_on_a_path() {
        let p = Tree::path(4);
        let spec = ShiftSpec {
            donor: 2,
            receiver: 1,
            moved: vec![3],
        };
        let t = shift_neighbors(&p, &spec).unwrap();
        assert_eq!(t, Tree::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap());
        assert_eq!(t.degree(1), Ok(3));

        let same = shift_neighbors(
            &p,
            &ShiftSpec {
                donor: 2,
                receiver: 1,
                moved: vec![],
            },
        );
        assert_eq!(same.unwrap(), p);
    }

    #[test]
    fn shift_rejects_bad_specs() {
        let p = Tree::path(4);
        let bad = |donor, receiver, moved: Vec<usize>| {
            shift_neighbors(
                &p,
                &ShiftSpec {
                    donor,
                    receiver,
                    moved,
                },
            )
            .unwrap_err()
        };
        assert!(matches!(bad(1, 1, vec![0]), Error::Precondition(_)));
        assert!(matches!(bad(2, 0, vec![0]), Error::Precondition(_)));
        assert!(matches!(bad(2, 9, vec![3]), Error::VertexOutOfRange { .. }));
        assert!(matches!(bad(2, 1, vec![3, 3]), Error::Precondition(_)));
        // Moving the donor's neighbor toward the receiver closes a cycle.
        let spec = ShiftSpec {
            donor: 3,
            receiver: 0,
            moved: vec![2],
        };
        assert!(matches!(
            shift_neighbors(&Tree::path(5), &spec),
            Err(Error::Structure(StructureError::Cycle { .. }))
        ));
    }

    #[test]
    fn swap_on_a_path() {
        let p = Tree::path(6);
        let t = swap_endpoints(&p, 1, 2, 4, 3).unwrap();
        let mut before = p.degrees();
        let mut after = t.degrees();
        assert_eq!(before, after);
        before.sort_unstable();
        after.sort_unstable();
        assert_eq!(before, after);
        assert!(t.is_adjacent(1, 3) && t.is_adjacent(4, 2));

        assert!(swap_endpoints(&p, 1, 3, 4, 3).is_err());
        assert!(swap_endpoints(&p, 1, 2, 2, 3).is_err());
        // With x outside the u-v path the exchange closes a cycle.
        assert!(matches!(
            swap_endpoints(&p, 1, 0, 4, 3),
            Err(Error::Structure(StructureError::Cycle { .. }))
        ));
    }

    #[test]
    fn support_pairs() {
        // Double broom: spine 0-1-2-3-4, vertex 0 and 4 carry three leaves.
        let broom = tree(
            11,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (4, 8),
                (4, 9),
                (4, 10),
            ],
        );
        assert_eq!(select_support_pair(&broom), Ok((1, 3)));

        // Spider with legs of length two: the stripped tree is a star.
        let spider = tree(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]);
        assert!(matches!(
            select_support_pair(&spider),
            Err(Error::Domain(_))
        ));

        // Caterpillar spine 0..5, each spine vertex carries one leaf.
        let mut edges: Vec<_> = (0..5).map(|i| (i, i + 1)).collect();
        edges.extend((0..6).map(|i| (i, i + 6)));
        let caterpillar = tree(12, &edges);
        assert_eq!(select_support_pair(&caterpillar), Ok((1, 4)));
    }

    #[test]
    fn pair_cases_on_small_instances() {
        // Spine 0-1-2-3-4-5 with leaves; 1 and 4 support the spine ends.
        //   0: leaves 6 ; 1: leaf 7 ; 4: leaf 8 ; 5: leaf 9.
        let t = tree(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (0, 6),
                (1, 7),
                (4, 8),
                (5, 9),
            ],
        );
        let d = decompose_pair(&t).unwrap();
        assert_eq!(d.case, PairCase::BothLoaded);
        let after = apply_pair_case(&t, PairCase::BothLoaded).unwrap();
        assert_eq!(independence_number(&after), independence_number(&t));
        assert!(sombor_index(&after) - sombor_index(&t) > 1e-6);

        // No pendants at either selected support.
        let t = tree(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (0, 7),
                (6, 8),
            ],
        );
        let d = decompose_pair(&t).unwrap();
        assert_eq!(d.case, PairCase::NoneLoaded);
        let after = apply_pair_case(&t, PairCase::NoneLoaded).unwrap();
        assert_eq!(independence_number(&after), independence_number(&t));
        assert!(sombor_index(&after) - sombor_index(&t) > 1e-6);
        assert!(apply_pair_case(&t, PairCase::OneLoaded).is_err());

        let star_based = construct_t_star(&ExtremalParams::new(8, 5).unwrap());
        assert!(matches!(
            apply_pair_case(&star_based, PairCase::BothLoaded),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn absorb_on_second_family() {
        // K_{1,3} with one pendant on each leaf, center 0 carries none.
        let t = tree(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]);
        assert_eq!(classify(&t), TreeClass::T2);
        let after = absorb_leaf_pendants(&t).unwrap();
        assert!(classify(&after).is_t1());
        assert_eq!(independence_number(&after), 4);
        assert!(sombor_index(&after) > sombor_index(&t) + 1e-6);
    }

    #[test]
    fn trimming() {
        // First family for (8, 5): star 0-{1,2}, 1 carries 2 pendants,
        // 2 carries 1, center carries 2.
        let t = tree(8, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (0, 6), (0, 7)]);
        assert_eq!(classify(&t), TreeClass::T1);
        let step = trim_arm(&t).unwrap().unwrap();
        let target = construct_t_star(&ExtremalParams::new(8, 5).unwrap());
        assert_eq!(step.canonical_code(), target.canonical_code());
        assert!(sombor_index(&step) > sombor_index(&t) + 1e-6);
        assert_eq!(trim_arm(&target), Ok(None));
        assert!(trim_arm(&Tree::path(6)).is_err());
    }
}
