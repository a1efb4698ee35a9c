//! Bipartite maximum matching and minimum vertex cover via König's theorem.
//!
//! Vertex and edge iteration is in ascending-id order throughout, so the
//! matching and the extracted cover are reproducible; downstream committee
//! construction depends on that.

use std::collections::BTreeSet;

pub type VertexId = u32;

/// A bipartite graph over arbitrary (not necessarily dense) vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
    /// (left, right) pairs, sorted, no duplicates.
    edges: Vec<(VertexId, VertexId)>,
}

impl BipartiteGraph {
    /// Builds a graph; edge endpoints must lie in their declared sides.
    /// Parallel edges collapse to one. Isolated vertices are allowed.
    pub fn new(
        left: impl IntoIterator<Item = VertexId>,
        right: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> BipartiteGraph {
        let left: BTreeSet<VertexId> = left.into_iter().collect();
        let right: BTreeSet<VertexId> = right.into_iter().collect();
        assert!(
            left.intersection(&right).next().is_none(),
            "vertex sides overlap"
        );
        let edges: BTreeSet<(VertexId, VertexId)> = edges
            .into_iter()
            .inspect(|&(u, v)| {
                assert!(left.contains(&u), "edge endpoint {u} not on left side");
                assert!(right.contains(&v), "edge endpoint {v} not on right side");
            })
            .collect();
        BipartiteGraph {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }

    pub fn left(&self) -> &[VertexId] {
        &self.left
    }

    pub fn right(&self) -> &[VertexId] {
        &self.right
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Pendant-augmented copy: for each vertex `x` in `pins`, adds a fresh
    /// vertex `x'` (on the opposite side) and the edge `[x, x']`. Every
    /// optimal cover of the result that is no larger than the original
    /// graph's must then contain all of `pins`.
    pub fn with_pendants(&self, pins: &[VertexId]) -> BipartiteGraph {
        let base = self
            .left
            .iter()
            .chain(&self.right)
            .copied()
            .max()
            .unwrap_or(0);
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        let mut edges = self.edges.clone();
        for (offset, &x) in pins.iter().enumerate() {
            let fresh = base + 1 + offset as VertexId;
            if self.left.binary_search(&x).is_ok() {
                right.push(fresh);
                edges.push((x, fresh));
            } else {
                assert!(self.right.binary_search(&x).is_ok(), "unknown vertex {x}");
                left.push(fresh);
                edges.push((fresh, x));
            }
        }
        BipartiteGraph::new(left, right, edges)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.left.len()];
        for &(u, v) in &self.edges {
            let ui = self.left.binary_search(&u).unwrap();
            let vi = self.right.binary_search(&v).unwrap();
            adj[ui].push(vi);
        }
        adj
    }
}

/// A maximum-cardinality matching, as sorted (left, right) edge pairs.
///
/// Augmenting-path search from each left vertex in ascending order; with
/// neighbor lists also ascending the result is deterministic.
pub fn max_matching(g: &BipartiteGraph) -> Vec<(VertexId, VertexId)> {
    let adj = g.adjacency();
    let mut match_right: Vec<Option<usize>> = vec![None; g.right.len()];
    let mut match_left: Vec<Option<usize>> = vec![None; g.left.len()];
    for u in 0..g.left.len() {
        let mut visited = vec![false; g.right.len()];
        augment(u, &adj, &mut match_left, &mut match_right, &mut visited);
    }
    match_left
        .iter()
        .enumerate()
        .filter_map(|(u, v)| v.map(|v| (g.left[u], g.right[v])))
        .collect()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match match_right[v] {
            None => true,
            Some(u2) => augment(u2, adj, match_left, match_right, visited),
        };
        if free {
            match_left[u] = Some(v);
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}

/// A minimum vertex cover, extracted from a maximum matching by the
/// alternating-reachability construction; its size equals the matching's.
pub fn min_vertex_cover(g: &BipartiteGraph) -> Vec<VertexId> {
    let adj = g.adjacency();
    let matching = max_matching(g);
    let mut match_left: Vec<Option<usize>> = vec![None; g.left.len()];
    let mut match_right: Vec<Option<usize>> = vec![None; g.right.len()];
    for &(u, v) in &matching {
        let ui = g.left.binary_search(&u).unwrap();
        let vi = g.right.binary_search(&v).unwrap();
        match_left[ui] = Some(vi);
        match_right[vi] = Some(ui);
    }
    // alternating reachability from unmatched left vertices:
    // left -> right along non-matching edges, right -> left along matching edges
    let mut reach_left = vec![false; g.left.len()];
    let mut reach_right = vec![false; g.right.len()];
    let mut queue: Vec<usize> = (0..g.left.len()).filter(|&u| match_left[u].is_none()).collect();
    for &u in &queue {
        reach_left[u] = true;
    }
    while let Some(u) = queue.pop() {
        for &v in &adj[u] {
            if match_left[u] == Some(v) || reach_right[v] {
                continue;
            }
            reach_right[v] = true;
            if let Some(u2) = match_right[v] {
                if !reach_left[u2] {
                    reach_left[u2] = true;
                    queue.push(u2);
                }
            }
        }
    }
    // cover = (unreachable left) ∪ (reachable right)
    let mut cover: Vec<VertexId> = Vec::new();
    for (u, &reached) in reach_left.iter().enumerate() {
        if !reached {
            cover.push(g.left[u]);
        }
    }
    for (v, &reached) in reach_right.iter().enumerate() {
        if reached {
            cover.push(g.right[v]);
        }
    }
    cover.sort_unstable();
    debug_assert_eq!(cover.len(), matching.len());
    debug_assert!(g.edges.iter().all(|&(u, v)| {
        cover.binary_search(&u).is_ok() || cover.binary_search(&v).is_ok()
    }));
    cover
}
