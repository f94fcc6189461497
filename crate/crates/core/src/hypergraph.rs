//! Hypergraphs over `0..n`, transversal classification and the
//! normalizations applied before the reduction gadgets are built.

use crate::class::{classify_with, SolutionClass};
use crate::error::{precondition, Error, Result};
use crate::vertex_set::VertexSet;

/// `NotSolution` carries the index of a missed edge, `Minimal` a private
/// edge per member.
pub type TransversalClass = SolutionClass<usize>;

/// Vertex universe `0..n` and an ordered edge list. Edge positions matter:
/// reductions refer to edges by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Panics if an edge reaches outside `0..n`; use [`Hypergraph::try_new`]
    /// for untrusted input.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Self {
        Self::try_new(n, edges).expect("edge outside the vertex universe")
    }

    pub fn try_new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for (j, e) in edges.iter().enumerate() {
            if let Some(v) = e.last().filter(|&v| v >= n) {
                return Err(Error::InvalidInput(format!(
                    "edge {} contains vertex {} outside 1..={}",
                    j + 1,
                    v + 1,
                    n
                )));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_one_based(n: usize, edges: &[&[usize]]) -> Self {
        Self::new(
            n,
            edges
                .iter()
                .map(|e| e.iter().map(|&v| v - 1).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> &VertexSet {
        &self.edges[j]
    }

    pub fn first_empty_edge(&self) -> Option<usize> {
        self.edges.iter().position(VertexSet::is_empty)
    }

    /// Index of the first edge disjoint from `t`.
    pub fn first_missed_edge(&self, t: &VertexSet) -> Option<usize> {
        self.edges.iter().position(|e| e.is_disjoint(t))
    }

    pub fn is_transversal(&self, t: &VertexSet) -> bool {
        self.first_missed_edge(t).is_none()
    }

    pub fn classify_transversal(&self, t: &VertexSet) -> TransversalClass {
        classify_with(t, |s| self.first_missed_edge(s))
    }

    pub fn is_minimal_transversal(&self, t: &VertexSet) -> bool {
        self.classify_transversal(t).is_minimal()
    }

    /// No edge is a proper subset of another. Repeated edges are allowed.
    pub fn is_sperner_up_to_duplicates(&self) -> bool {
        self.edges.iter().all(|e| {
            self.edges
                .iter()
                .all(|f| !(e.is_subset(f) && e != f))
        })
    }

    /// No edge contained in a different edge, repeats included.
    pub fn is_sperner(&self) -> bool {
        self.is_sperner_up_to_duplicates() && {
            let mut sorted = self.edges.clone();
            sorted.sort();
            sorted.windows(2).all(|w| w[0] != w[1])
        }
    }

    /// Keeps the first copy of every inclusion-minimal edge, in order.
    pub fn sperner_reduce(&self) -> Hypergraph {
        let mut kept: Vec<VertexSet> = Vec::new();
        for (j, e) in self.edges.iter().enumerate() {
            let dominated = self.edges.iter().enumerate().any(|(k, f)| {
                f.is_subset(e) && (f != e || k < j)
            });
            if !dominated {
                kept.push(e.clone());
            }
        }
        Hypergraph {
            n: self.n,
            edges: kept,
        }
    }

    /// Repeatedly strips a vertex lying in every edge (lowest index first).
    /// Edges emptied by the removal stay in the residual, which then has no
    /// transversal at all.
    pub fn peel_universal_vertices(&self) -> Peeled {
        let mut residual = self.clone();
        let mut peeled = Vec::new();
        while !residual.edges.is_empty() {
            let mut common = VertexSet::full(residual.n);
            for e in &residual.edges {
                common.intersect_with(e);
            }
            let Some(v) = common.first() else { break };
            for e in &mut residual.edges {
                e.remove(v);
            }
            peeled.push(v);
        }
        Peeled { residual, peeled }
    }

    /// Pads to the shape required by the resolving gadget: isolated vertices
    /// until `n` is a power of two of at least 4, then copies of the first
    /// edge until `m` is too. Neither step changes the minimal transversals.
    pub fn pad_for_resolving_reduction(&self) -> Result<Hypergraph> {
        if self.edges.is_empty() {
            return Err(precondition("hypergraph has no edge"));
        }
        if !self.is_sperner_up_to_duplicates() {
            return Err(precondition("hypergraph is not Sperner"));
        }
        let full = VertexSet::full(self.n);
        if let Some(j) = self.edges.iter().position(|e| *e == full) {
            return Err(precondition(format!(
                "edge {} contains every vertex",
                j + 1
            )));
        }
        let n = self.n.next_power_of_two().max(4);
        let m = self.m().next_power_of_two().max(4);
        let mut edges = self.edges.clone();
        edges.resize(m, self.edges[0].clone());
        Ok(Hypergraph { n, edges })
    }

    /// Pads an extension instance to the shape required by the extension
    /// resolving gadget: `n + 1` and `m + 1` powers of two (with `n, m >= 3`),
    /// and the last edge being `{last vertex}`, a vertex not in `forbidden`.
    ///
    /// Each added vertex gets its own singleton edge, and further copies of the
    /// first added singleton fill up the edge count. Added vertices lie in
    /// every minimal transversal and in neither `required` nor `forbidden`,
    /// so the extension answer is unchanged.
    pub fn pad_for_ext_resolving_reduction(
        &self,
        required: &VertexSet,
        forbidden: &VertexSet,
    ) -> Result<(Hypergraph, VertexSet, VertexSet)> {
        if required.intersects(forbidden) {
            return Err(Error::InvalidInput(
                "required and forbidden sets intersect".into(),
            ));
        }
        if self.is_ext_resolving_ready(forbidden) {
            return Ok((self.clone(), required.clone(), forbidden.clone()));
        }
        let (n, m) = ext_padding_target(self.n, self.m());
        let added = n - self.n;
        let mut edges = self.edges.clone();
        for d in self.n..n - 1 {
            edges.push(VertexSet::singleton(d));
        }
        let filler = VertexSet::singleton(self.n);
        while edges.len() < m - 1 {
            edges.push(filler.clone());
        }
        edges.push(VertexSet::singleton(n - 1));
        debug_assert!(added >= 1 && edges.len() == m);
        let padded = Hypergraph { n, edges };
        debug_assert!(padded.is_ext_resolving_ready(forbidden));
        Ok((padded, required.clone(), forbidden.clone()))
    }

    /// Shape check for the extension resolving gadget.
    pub fn is_ext_resolving_ready(&self, forbidden: &VertexSet) -> bool {
        let (n, m) = (self.n, self.m());
        n >= EXT_MIN_SIZE
            && m >= EXT_MIN_SIZE
            && (n + 1).is_power_of_two()
            && (m + 1).is_power_of_two()
            && self.edges[m - 1] == VertexSet::singleton(n - 1)
            && !forbidden.contains(n - 1)
    }
}

/// Smallest vertex and edge counts accepted by the extension resolving
/// gadget. With a single bit of binary coding the coding vertices stop being
/// individually necessary, and the extension answers diverge.
pub const EXT_MIN_SIZE: usize = 3;

/// Smallest `(n', m')` with `n' > n`, `m' >= m + (n' - n)`, both one less
/// than a power of two and at least [`EXT_MIN_SIZE`].
fn ext_padding_target(n: usize, m: usize) -> (usize, usize) {
    let mut target_n = EXT_MIN_SIZE;
    while target_n <= n {
        target_n = 2 * target_n + 1;
    }
    let mut target_m = EXT_MIN_SIZE;
    while target_m < m + (target_n - n) {
        target_m = 2 * target_m + 1;
    }
    (target_n, target_m)
}

/// Result of [`Hypergraph::peel_universal_vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeled {
    pub residual: Hypergraph,
    /// In peeling order.
    pub peeled: Vec<usize>,
}

impl Peeled {
    /// Minimal transversals of the original hypergraph from those of the
    /// residual: each peeled vertex alone, plus every residual transversal.
    pub fn reconstruct(&self, residual_transversals: &[VertexSet]) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .peeled
            .iter()
            .map(|&v| VertexSet::singleton(v))
            .collect();
        out.extend(residual_transversals.iter().cloned());
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::oracle::{brute_minimal_solutions, TransversalPredicate};
    use crate::vertex_set::vset;
    use proptest::prelude::*;

    fn oracle_tr(h: &Hypergraph) -> Vec<VertexSet> {
        brute_minimal_solutions(&TransversalPredicate::new(h), 20).unwrap()
    }

    fn arb_hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
        (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
            proptest::collection::vec(1u64..(1 << n), m).prop_map(move |masks| {
                Hypergraph::new(n, masks.into_iter().map(VertexSet::from_mask).collect())
            })
        })
    }

    #[test]
    fn classify_examples() {
        let h2 = generators::h2();
        let minimal = h2.classify_transversal(&vset(&[1, 4]));
        let SolutionClass::Minimal(private) = minimal else {
            panic!("{{2,5}} should be minimal");
        };
        for (v, j) in private {
            assert_eq!(h2.edge(j).intersection(&vset(&[1, 4])), vset(&[v]));
        }
        assert_eq!(
            h2.classify_transversal(&vset(&[0, 1, 4])),
            SolutionClass::NotMinimal { removable: 0 }
        );
        assert_eq!(
            h2.classify_transversal(&vset(&[0, 2])),
            SolutionClass::NotSolution(3)
        );
    }

    #[test]
    fn sperner_examples() {
        let h = Hypergraph::from_one_based(3, &[&[1, 2], &[1], &[2, 3]]);
        assert_eq!(
            h.sperner_reduce(),
            Hypergraph::from_one_based(3, &[&[1], &[2, 3]])
        );
        assert_eq!(generators::h2().sperner_reduce(), generators::h2());
        let dup = Hypergraph::from_one_based(1, &[&[1], &[1]]);
        assert_eq!(dup.sperner_reduce(), Hypergraph::from_one_based(1, &[&[1]]));
        assert!(!dup.is_sperner());
        assert!(dup.is_sperner_up_to_duplicates());
    }

    #[test]
    fn peel_examples() {
        let h = Hypergraph::from_one_based(3, &[&[1, 2], &[1, 3]]);
        let p = h.peel_universal_vertices();
        assert_eq!(p.peeled, vec![0]);
        assert_eq!(p.residual.edges(), &[vset(&[1]), vset(&[2])]);
        let rebuilt = p.reconstruct(&oracle_tr(&p.residual));
        assert_eq!(rebuilt, vec![vset(&[0]), vset(&[1, 2])]);
        assert_eq!(rebuilt, oracle_tr(&h));

        let h2 = generators::h2();
        let p = h2.peel_universal_vertices();
        assert!(p.peeled.is_empty());
        assert_eq!(p.residual, h2);

        let single = Hypergraph::from_one_based(1, &[&[1]]);
        let p = single.peel_universal_vertices();
        assert_eq!(p.peeled, vec![0]);
        assert_eq!(p.residual.first_empty_edge(), Some(0));
        assert!(oracle_tr(&p.residual).is_empty());
        assert_eq!(p.reconstruct(&[]), vec![vset(&[0])]);
    }

    #[test]
    fn resolving_padding_examples() {
        let padded = generators::h2().pad_for_resolving_reduction().unwrap();
        assert_eq!((padded.n(), padded.m()), (8, 4));
        assert_eq!(oracle_tr(&padded), oracle_tr(&generators::h2()));
        let h1 = generators::h1();
        assert_eq!(h1.pad_for_resolving_reduction().unwrap(), h1);
        let full = Hypergraph::from_one_based(1, &[&[1]]);
        assert!(matches!(
            full.pad_for_resolving_reduction(),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn ext_padding_examples() {
        let none = VertexSet::new();
        let h = Hypergraph::from_one_based(2, &[&[1, 2]]);
        let (p, _, _) = h.pad_for_ext_resolving_reduction(&none, &none).unwrap();
        assert_eq!((p.n(), p.m()), (3, 3));
        assert_eq!(p.edges()[1..], [vset(&[2]), vset(&[2])]);

        let ready = Hypergraph::from_one_based(3, &[&[1, 2], &[2, 3], &[3]]);
        let (p, _, _) = ready.pad_for_ext_resolving_reduction(&none, &none).unwrap();
        assert_eq!(p, ready);

        let h = Hypergraph::from_one_based(3, &[&[1, 2], &[2, 3]]);
        let (p, _, _) = h.pad_for_ext_resolving_reduction(&none, &none).unwrap();
        assert_eq!((p.n(), p.m()), (7, 7));
        assert!(p.is_ext_resolving_ready(&none));

        // a forbidden last vertex forces padding
        let (p, _, _) = ready
            .pad_for_ext_resolving_reduction(&none, &vset(&[2]))
            .unwrap();
        assert_eq!((p.n(), p.m()), (7, 7));
    }

    #[test]
    fn ext_padding_target_is_smallest() {
        for n in 1..20 {
            for m in 1..20 {
                let (tn, tm) = ext_padding_target(n, m);
                let brute_n = (n + 1..).find(|&x| x >= EXT_MIN_SIZE && (x + 1).is_power_of_two()).unwrap();
                let brute_m = (m + brute_n - n..)
                    .find(|&x| x >= EXT_MIN_SIZE && (x + 1).is_power_of_two())
                    .unwrap();
                assert_eq!((tn, tm), (brute_n, brute_m));
            }
        }
    }

    proptest! {
        #[test]
        fn witnesses_reverify(h in arb_hypergraph(7, 6), mask in 0u64..128) {
            let t = VertexSet::from_mask(mask & ((1 << h.n()) - 1));
            match h.classify_transversal(&t) {
                SolutionClass::NotSolution(j) => prop_assert!(h.edge(j).is_disjoint(&t)),
                SolutionClass::NotMinimal { removable } => {
                    prop_assert!(t.contains(removable));
                    let mut s = t.clone();
                    s.remove(removable);
                    prop_assert!(h.is_transversal(&s));
                }
                SolutionClass::Minimal(private) => {
                    prop_assert!(h.is_transversal(&t));
                    prop_assert_eq!(private.len(), t.len());
                    for (v, j) in private {
                        prop_assert_eq!(h.edge(j).intersection(&t), VertexSet::singleton(v));
                    }
                }
            }
        }

        #[test]
        fn sperner_reduce_preserves_transversals(h in arb_hypergraph(8, 8)) {
            let r = h.sperner_reduce();
            prop_assert!(r.is_sperner());
            prop_assert_eq!(oracle_tr(&r), oracle_tr(&h));
        }

        #[test]
        fn peeling_reconstructs(h in arb_hypergraph(6, 5), planted in 0usize..3) {
            // plant `planted` universal vertices on fresh indices
            let n = h.n() + planted;
            let edges = h.edges().iter().map(|e| {
                let mut e = e.clone();
                e.extend(h.n()..n);
                e
            }).collect();
            let h = Hypergraph::new(n, edges);
            let p = h.peel_universal_vertices();
            prop_assert!(p.peeled.len() >= planted);
            prop_assert_eq!(p.reconstruct(&oracle_tr(&p.residual)), oracle_tr(&h));
        }

        #[test]
        fn resolving_padding_preserves_transversals(h in arb_hypergraph(7, 7)) {
            let h = h.sperner_reduce();
            if let Ok(p) = h.pad_for_resolving_reduction() {
                prop_assert!(p.n().is_power_of_two() && p.n() > 2);
                prop_assert!(p.m().is_power_of_two() && p.m() > 2);
                prop_assert_eq!(oracle_tr(&p), oracle_tr(&h));
            } else {
                prop_assert!(h.edges().iter().any(|e| e.len() == h.n()));
            }
        }
    }
}
