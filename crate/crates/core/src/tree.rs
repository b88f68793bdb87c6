//! Immutable simple trees on the vertex set `0..n`.

use std::collections::VecDeque;

use crate::canon::{self, CanonicalCode};
use crate::error::{Error, Result, StructureError};

/// A tree stored as sorted adjacency lists.
///
/// Every value of this type satisfies the tree invariants: `n >= 1`
/// vertices, exactly `n - 1` edges, no loops or parallel edges, connected.
/// Trees are never mutated; the rewiring operations in
/// [`crate::transforms`] build new values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

/// Result of [`Tree::strip_pendants`]: the residue tree plus, for each
/// residue vertex, its id in the original tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stripped {
    pub tree: Tree,
    pub original_ids: Vec<usize>,
}

impl Tree {
    /// Builds a tree from an undirected edge list, validating every tree
    /// invariant. Endpoint order within an edge does not matter.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Tree, StructureError> {
        if order == 0 {
            return Err(StructureError::Empty);
        }
        if edges.len() != order - 1 {
            return Err(StructureError::EdgeCount {
                order,
                expected: order - 1,
                found: edges.len(),
            });
        }

        let mut adjacency = vec![Vec::new(); order];
        let mut components = DisjointSets::new(order);
        for (edge, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= order {
                    return Err(StructureError::VertexOutOfRange {
                        edge,
                        vertex,
                        order,
                    });
                }
            }
            if u == v {
                return Err(StructureError::SelfLoop { edge, vertex: u });
            }
            if !components.union(u, v) {
                let (u, v) = (u.min(v), u.max(v));
                return Err(if adjacency[u].contains(&v) {
                    StructureError::DuplicateEdge { edge, u, v }
                } else {
                    StructureError::Cycle { edge, u, v }
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Tree { adjacency })
    }

    /// The path `0 - 1 - ... - (n-1)`. Panics if `n == 0`.
    pub fn path(order: usize) -> Tree {
        assert!(order > 0, "a tree needs at least one vertex");
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Tree::from_edges(order, &edges).expect("path is a tree")
    }

    /// The star `K_{1,n-1}` with center 0. Panics if `n == 0`.
    pub fn star(order: usize) -> Tree {
        assert!(order > 0, "a tree needs at least one vertex");
        let edges: Vec<_> = (1..order).map(|v| (0, v)).collect();
        Tree::from_edges(order, &edges).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.order() - 1
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Vertices of degree one, ascending. Empty for the single-vertex tree.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.adjacency[v].len() == 1)
            .collect()
    }

    /// The unique neighbor of a pendant vertex.
    pub fn support_vertex(&self, pendant: usize) -> Result<usize> {
        self.check_vertex(pendant)?;
        match self.adjacency[pendant].as_slice() {
            &[support] => Ok(support),
            _ => Err(Error::NotPendant(pendant)),
        }
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices of the unique `from`-`to` path, endpoints included.
    pub fn path_between(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        let parent = self.parents_from(to);
        let mut path = vec![from];
        let mut at = from;
        while at != to {
            at = parent[at];
            path.push(at);
        }
        Ok(path)
    }

    /// Parent pointers of the tree rooted at `root`; the root points at itself.
    pub(crate) fn parents_from(&self, root: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.order()];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Deletes every pendant vertex and re-indexes the survivors in
    /// ascending order of their original ids.
    pub fn strip_pendants(&self) -> Result<Stripped> {
        if self.order() <= 2 {
            return Err(Error::Domain(
                "stripping pendants from a tree of order <= 2 leaves nothing",
            ));
        }
        let original_ids: Vec<usize> = (0..self.order())
            .filter(|&v| self.adjacency[v].len() > 1)
            .collect();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in original_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|(u, v)| (new_id[u], new_id[v]))
            .collect();
        let tree = Tree::from_edges(original_ids.len(), &edges)
            .expect("the non-pendant vertices of a tree induce a subtree");
        Ok(Stripped { tree, original_ids })
    }

    /// Renames vertex `v` to `permutation[v]`. Panics unless `permutation`
    /// is a permutation of `0..n`.
    pub fn relabel(&self, permutation: &[usize]) -> Tree {
        assert_eq!(permutation.len(), self.order());
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| (permutation[u], permutation[v]))
            .collect();
        Tree::from_edges(self.order(), &edges).expect("relabeling by a permutation")
    }

    /// The one or two central vertices (minimum eccentricity), ascending.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree = self.degrees();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in &self.adjacency[leaf] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Isomorphism-complete code: equal for two trees exactly when they are
    /// isomorphic.
    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_code(self)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
