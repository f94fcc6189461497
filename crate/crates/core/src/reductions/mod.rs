//! Gadget graphs built from hypergraphs, their decoders, and the pipelines
//! that recover minimal transversals from metric enumerations.
//!
//! Vertex numbering is fixed: the hypergraph vertices `V` come first, then
//! the edge vertices `H`, then the remaining gadget parts in the order
//! documented on each builder.

mod ext;
mod geodetic;
mod recovery;
mod render;
mod resolving;

use std::collections::HashMap;
use std::fmt;

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub use ext::{
    build_ext_geodetic_instance, build_ext_resolving_instance, ext_check, ExtAnswer, ExtInstance,
    ExtTarget, DEFAULT_EXT_LIMIT,
};
pub use geodetic::{build_mingeodetic_instance, decode_mingeodetic_solution, transenum_via_mingeodetic};
pub use recovery::TransversalRecovery;
pub use resolving::{
    build_minresolving_instance, decode_minresolving_solution, transenum_via_minresolving,
};

/// What a gadget vertex stands for. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    V(usize),
    E(usize),
    EPrime(usize),
    U(usize),
    UPrime(usize),
    UStar(usize),
    W(usize),
    WPrime(usize),
    A,
    B,
    C,
    EStar,
    Universal,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::V(i) => write!(f, "v{i}"),
            Role::E(j) => write!(f, "e{j}"),
            Role::EPrime(j) => write!(f, "e'{j}"),
            Role::U(k) => write!(f, "u{k}"),
            Role::UPrime(k) => write!(f, "u'{k}"),
            Role::UStar(i) => write!(f, "u*{i}"),
            Role::W(k) => write!(f, "w{k}"),
            Role::WPrime(k) => write!(f, "w'{k}"),
            Role::A => f.write_str("a"),
            Role::B => f.write_str("b"),
            Role::C => f.write_str("c"),
            Role::EStar => f.write_str("e*"),
            Role::Universal => f.write_str("u*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Resolving,
    GeodeticSplit,
    ExtGeodetic,
    ExtResolving,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::Resolving => "resolving",
            ReductionKind::GeodeticSplit => "geodetic",
            ReductionKind::ExtGeodetic => "ext-geodetic",
            ReductionKind::ExtResolving => "ext-resolving",
        })
    }
}

/// A gadget graph with the role of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub source: Hypergraph,
    pub kind: ReductionKind,
    index: HashMap<Role, usize>,
}

impl ReductionArtifact {
    fn new(graph: Graph, roles: Vec<Role>, source: Hypergraph, kind: ReductionKind) -> Self {
        assert_eq!(graph.n(), roles.len());
        let index: HashMap<Role, usize> = roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
        assert_eq!(index.len(), roles.len(), "roles must be distinct");
        ReductionArtifact {
            graph,
            roles,
            source,
            kind,
            index,
        }
    }

    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.index.get(&role).copied()
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    /// Vertices whose role satisfies `pred`.
    pub fn vertices_where(&self, pred: impl Fn(Role) -> bool) -> VertexSet {
        (0..self.roles.len()).filter(|&v| pred(self.roles[v])).collect()
    }

    /// Gadget vertices of the source vertices in `t` (0-based source indices).
    pub fn lift(&self, t: &VertexSet) -> VertexSet {
        t.map(|i| self.vertex(Role::V(i + 1)).expect("source vertex in range"))
    }

    /// Source vertices (0-based) of the `V` vertices in `s`.
    pub fn project(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .filter_map(|v| match self.roles[v] {
                Role::V(i) => Some(i - 1),
                _ => None,
            })
            .collect()
    }
}

/// What a minimal solution of a gadget graph says about the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodedSolution {
    /// A twin-pair selection `z` plus one edge vertex: no transversal.
    GarbageResolving { z: VertexSet, e: usize },
    /// A twin-pair selection plus a minimal transversal (source indices).
    TransversalResolving { z: VertexSet, t: VertexSet },
    /// The mandatory side plus the pendant of edge `j` (1-based).
    GarbageGeodetic(usize),
    TransversalGeodetic(VertexSet),
}

impl DecodedSolution {
    pub fn transversal(&self) -> Option<&VertexSet> {
        match self {
            DecodedSolution::TransversalResolving { t, .. } => Some(t),
            DecodedSolution::TransversalGeodetic(t) => Some(t),
            _ => None,
        }
    }
}

/// 1-based positions of the set bits of `j`.
pub fn bit_indices(j: usize) -> impl Iterator<Item = usize> {
    (0..usize::BITS as usize).filter(move |&b| j >> b & 1 == 1).map(|b| b + 1)
}

fn log2_exact(x: usize) -> Option<usize> {
    x.is_power_of_two().then(|| x.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_indices_examples() {
        assert_eq!(bit_indices(1).collect::<Vec<_>>(), vec![1]);
        assert_eq!(bit_indices(6).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(bit_indices(8).collect::<Vec<_>>(), vec![4]);
        assert_eq!(bit_indices(0).count(), 0);
    }

    #[test]
    fn role_names() {
        let names: Vec<String> = [
            Role::V(1),
            Role::E(2),
            Role::EPrime(3),
            Role::U(1),
            Role::UPrime(1),
            Role::UStar(4),
            Role::W(2),
            Role::WPrime(2),
            Role::A,
            Role::EStar,
            Role::Universal,
        ]
        .iter()
        .map(Role::to_string)
        .collect();
        assert_eq!(names, ["v1", "e2", "e'3", "u1", "u'1", "u*4", "w2", "w'2", "a", "e*", "u*"]);
    }
}
