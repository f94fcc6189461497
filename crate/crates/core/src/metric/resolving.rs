use crate::class::{classify_with, SolutionClass};
use crate::engine::{enumerate_minimal_transversals, BoxedStream, EngineChoice};
use crate::graph::{DistanceMatrix, Graph};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// One edge per pair `a < b` (in lexicographic pair order) holding the
/// vertices at different distances from `a` and `b`. Unreachable is a
/// distance like any other. Duplicate edges are kept.
pub fn distinguishing_hypergraph(g: &Graph) -> Hypergraph {
    let d = g.distances();
    let n = g.n();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            edges.push((0..n).filter(|&v| d.get(a, v) != d.get(b, v)).collect());
        }
    }
    Hypergraph::new(n, edges)
}

/// Minimal resolving sets are the minimal transversals of the distinguishing
/// hypergraph.
pub fn enumerate_minimal_resolving_sets(g: &Graph, algo: EngineChoice) -> BoxedStream {
    let h = distinguishing_hypergraph(g).sperner_reduce();
    enumerate_minimal_transversals(&h, algo).expect("distinguishing edges contain their pair")
}

/// The first pair `a < b` that no member of `s` tells apart.
pub fn resolving_failure(d: &DistanceMatrix, s: &VertexSet) -> Option<(usize, usize)> {
    let n = d.n();
    let members = s.to_vec();
    for a in 0..n {
        for b in a + 1..n {
            if members.iter().all(|&w| d.get(a, w) == d.get(b, w)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Failures carry an unresolved pair; private witnesses are pairs only that
/// member resolves.
pub fn classify_resolving(g: &Graph, s: &VertexSet) -> SolutionClass<(usize, usize)> {
    let d = g.distances();
    classify_with(s, |t| resolving_failure(&d, t))
}
