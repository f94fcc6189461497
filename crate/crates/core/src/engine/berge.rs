use std::collections::HashSet;

use super::ScriptedStream;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Berge multiplication. The whole family is built before the first output,
/// so every solution is stamped with the final tick count.
pub fn berge_transversals(h: &Hypergraph) -> ScriptedStream {
    let mut ticks = 0u64;
    let mut family: Vec<VertexSet> = vec![VertexSet::new()];
    for edge in h.edges() {
        let mut next: Vec<VertexSet> = Vec::new();
        let mut seen = HashSet::new();
        for t in &family {
            ticks += 1;
            if t.intersects(edge) {
                if seen.insert(t.clone()) {
                    next.push(t.clone());
                }
                continue;
            }
            for v in edge.iter() {
                let mut grown = t.clone();
                grown.insert(v);
                if seen.insert(grown.clone()) {
                    next.push(grown);
                }
            }
        }
        // keep inclusion-minimal members; sizes ascend so earlier ones dominate
        next.sort_by_key(|s| s.len());
        let mut kept: Vec<VertexSet> = Vec::with_capacity(next.len());
        for s in next {
            ticks += 1;
            if !kept.iter().any(|k| k.is_subset(&s)) {
                kept.push(s);
            }
        }
        family = kept;
    }
    family.sort();
    let items = family.into_iter().map(|s| (s, ticks)).collect();
    ScriptedStream::new(items, ticks)
}
