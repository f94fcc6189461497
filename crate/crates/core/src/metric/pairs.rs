use std::collections::BTreeSet;

use super::require_connected;
use crate::error::Result;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Hypergraph whose nodes are the vertex pairs `x < y` of a graph, with one
/// edge per vertex `v` holding the pairs whose shortest paths pass through
/// `v` (endpoints included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairHypergraph {
    vertices: usize,
    hypergraph: Hypergraph,
}

impl PairHypergraph {
    /// Number of vertices of the underlying graph.
    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn node_count(&self) -> usize {
        self.hypergraph.n()
    }

    /// Node index of the pair `{x, y}`, `x != y`.
    pub fn node(&self, x: usize, y: usize) -> usize {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        assert!(x != y && y < self.vertices);
        let n = self.vertices;
        x * (2 * n - x - 1) / 2 + (y - x - 1)
    }

    pub fn pair(&self, node: usize) -> (usize, usize) {
        let n = self.vertices;
        let mut x = 0;
        let mut start = 0;
        while start + (n - x - 1) <= node {
            start += n - x - 1;
            x += 1;
        }
        (x, x + 1 + node - start)
    }

    /// The edge of vertex `v`.
    pub fn edge(&self, v: usize) -> &VertexSet {
        self.hypergraph.edge(v)
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    /// All pairs of `s`, as nodes.
    pub fn pairs_of(&self, s: &VertexSet) -> VertexSet {
        let members = s.to_vec();
        let mut nodes = VertexSet::new();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                nodes.insert(self.node(x, y));
            }
        }
        nodes
    }

    /// Vertices occurring in some node of `nodes`.
    pub fn union_of(&self, nodes: &VertexSet) -> VertexSet {
        let mut s = VertexSet::new();
        for node in nodes {
            let (x, y) = self.pair(node);
            s.insert(x);
            s.insert(y);
        }
        s
    }

    pub fn to_pairs(&self, nodes: &VertexSet) -> Vec<(usize, usize)> {
        nodes.iter().map(|node| self.pair(node)).collect()
    }

    /// `nodes` is exactly the pair family of its union.
    pub fn is_consistent(&self, nodes: &VertexSet) -> bool {
        self.pairs_of(&self.union_of(nodes)) == *nodes
    }
}

pub fn pair_cover_hypergraph(g: &Graph) -> Result<PairHypergraph> {
    require_connected(g)?;
    let n = g.n();
    let d = g.distances();
    let mut edges = vec![VertexSet::new(); n];
    let mut node = 0;
    for x in 0..n {
        for y in x + 1..n {
            for v in d.interval(x, y).iter() {
                edges[v].insert(node);
            }
            node += 1;
        }
    }
    Ok(PairHypergraph {
        vertices: n,
        hypergraph: Hypergraph::new(n * n.saturating_sub(1) / 2, edges),
    })
}

/// True iff the pairs are all pairs of the vertices they mention.
pub fn is_consistent(pairs: &[(usize, usize)]) -> bool {
    let normalized: BTreeSet<(usize, usize)> = pairs
        .iter()
        .map(|&(x, y)| if x < y { (x, y) } else { (y, x) })
        .collect();
    if normalized.iter().any(|&(x, y)| x == y) {
        return false;
    }
    let union: BTreeSet<usize> = normalized.iter().flat_map(|&(x, y)| [x, y]).collect();
    let union: Vec<usize> = union.into_iter().collect();
    let full = union.len() * union.len().saturating_sub(1) / 2;
    normalized.len() == full
}
