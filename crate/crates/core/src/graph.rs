//! Simple undirected graphs with bitset adjacency, BFS distances and the
//! structural predicates used across the crate.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Distance value for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![VertexSet::new(); n],
        }
    }

    /// Builds a graph from an edge list; duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::IndexOutOfRange { u, v, vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    /// Infallible edge insertion for internal constructions with trusted indices.
    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
    }

    pub(crate) fn disconnect(&mut self, u: usize, v: usize) {
        self.adjacency[u].remove(v);
        self.adjacency[v].remove(u);
    }

    pub(crate) fn connect_all(&mut self, a: &[usize], b: &[usize]) {
        for &x in a {
            for &y in b {
                if x != y {
                    self.connect(x, y);
                }
            }
        }
    }

    pub(crate) fn make_clique(&mut self, vs: &[usize]) {
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                self.connect(x, y);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adjacency[v].clone();
        s.insert(v);
        s
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adjacency[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_clique(&self, vs: &VertexSet) -> bool {
        vs.iter().all(|v| {
            let mut rest = vs.clone();
            rest.remove(v);
            rest.is_subset(&self.adjacency[v])
        })
    }

    pub fn is_independent(&self, vs: &VertexSet) -> bool {
        vs.iter().all(|v| self.adjacency[v].is_disjoint(vs))
    }

    /// The neighborhood of `v` is a clique. Such a vertex is never an inner
    /// vertex of a shortest path.
    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(&self.adjacency[v])
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in &self.adjacency[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs shortest path lengths by one BFS per vertex.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(self.bfs(s));
        }
        DistanceMatrix { n, dist }
    }

    /// Subgraph induced by `vs`, relabelled to `0..vs.len()` in increasing order.
    pub fn induced(&self, vs: &VertexSet) -> Graph {
        let order = vs.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(order.len());
        for (i, &v) in order.iter().enumerate() {
            for w in self.adjacency[v].intersection(vs).iter() {
                if index[w] > i {
                    g.connect(i, index[w]);
                }
            }
        }
        g
    }

    /// Partition into twin classes. Two vertices are false twins when their
    /// open neighborhoods agree and true twins when their closed ones do; a
    /// vertex can only have twins of one kind.
    pub fn twin_classes(&self) -> Vec<TwinClass> {
        let n = self.n();
        let mut by_open: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
        let mut by_closed: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            by_open.entry(self.adjacency[v].clone()).or_default().push(v);
            by_closed.entry(self.closed_neighborhood(v)).or_default().push(v);
        }
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for (groups, kind) in [(by_open, TwinKind::False), (by_closed, TwinKind::True)] {
            for members in groups.into_values().filter(|m| m.len() > 1) {
                for &v in &members {
                    debug_assert!(!assigned[v]);
                    assigned[v] = true;
                }
                classes.push(TwinClass { members, kind });
            }
        }
        for v in (0..n).filter(|&v| !assigned[v]) {
            classes.push(TwinClass {
                members: vec![v],
                kind: TwinKind::Single,
            });
        }
        classes.sort_by_key(|c| c.members[0]);
        classes
    }

    /// A split partition with the largest possible independent side, or
    /// `None` when the graph is not split.
    ///
    /// Candidate from the degree sequence test, then at most one clique
    /// vertex without neighbors on the independent side moves over. Two
    /// split partitions differ in at most one vertex per side, so no
    /// further moves can enlarge the independent side.
    pub fn split_partition(&self) -> Option<SplitPartition> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let deg: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let k = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
        let lhs: usize = deg[..k].iter().sum();
        let rhs: usize = k * k.saturating_sub(1) + deg[k..].iter().sum::<usize>();
        if lhs != rhs {
            return None;
        }
        let mut clique: VertexSet = order[..k].iter().collect();
        let mut independent: VertexSet = order[k..].iter().collect();
        debug_assert!(self.is_clique(&clique) && self.is_independent(&independent));
        if let Some(v) = clique
            .iter()
            .find(|&v| self.adjacency[v].is_disjoint(&independent))
        {
            clique.remove(v);
            independent.insert(v);
        }
        Some(SplitPartition {
            clique,
            independent,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// Non-adjacent, equal open neighborhoods.
    False,
    /// Adjacent, equal closed neighborhoods.
    True,
    /// No twin at all.
    Single,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    pub members: Vec<usize>,
    pub kind: TwinKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.clique.is_disjoint(&self.independent)
            && self.clique.union(&self.independent) == VertexSet::full(g.n())
            && g.is_clique(&self.clique)
            && g.is_independent(&self.independent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn is_reachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != UNREACHABLE
    }

    /// `v` lies on some shortest `x`-`y` path (endpoints included).
    #[inline]
    pub fn on_shortest_path(&self, x: usize, v: usize, y: usize) -> bool {
        let (xv, vy, xy) = (self.get(x, v), self.get(v, y), self.get(x, y));
        xv != UNREACHABLE && vy != UNREACHABLE && xy != UNREACHABLE && xv + vy == xy
    }

    /// All vertices on shortest `x`-`y` paths.
    pub fn interval(&self, x: usize, y: usize) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.on_shortest_path(x, v, y))
            .collect()
    }
}
