//! Exhaustive reference answers, written straight from the definitions and
//! sharing no code with the enumeration engines.

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::hypergraph::Hypergraph;
use crate::metric::PairHypergraph;
use crate::vertex_set::VertexSet;

/// A property of vertex subsets of `0..ground_size()`.
pub trait MonotonePredicate {
    fn ground_size(&self) -> usize;

    fn holds(&self, s: &VertexSet) -> bool;

    /// Upward closed. When false the oracle falls back to a full scan.
    fn is_monotone(&self) -> bool {
        true
    }
}

pub struct TransversalPredicate<'a> {
    h: &'a Hypergraph,
}

impl<'a> TransversalPredicate<'a> {
    pub fn new(h: &'a Hypergraph) -> Self {
        TransversalPredicate { h }
    }
}

impl MonotonePredicate for TransversalPredicate<'_> {
    fn ground_size(&self) -> usize {
        self.h.n()
    }

    fn holds(&self, s: &VertexSet) -> bool {
        self.h.edges().iter().all(|e| e.intersects(s))
    }
}

/// Distance vectors to the members are pairwise distinct.
pub struct ResolvingPredicate {
    d: DistanceMatrix,
}

impl ResolvingPredicate {
    pub fn new(g: &Graph) -> Self {
        ResolvingPredicate { d: g.distances() }
    }
}

impl MonotonePredicate for ResolvingPredicate {
    fn ground_size(&self) -> usize {
        self.d.n()
    }

    fn holds(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        let mut vectors: Vec<Vec<u32>> = (0..self.d.n())
            .map(|v| members.iter().map(|&w| self.d.get(v, w)).collect())
            .collect();
        vectors.sort_unstable();
        vectors.windows(2).all(|w| w[0] != w[1])
    }
}

/// Every vertex lies on a shortest path between two members (or is one).
pub struct GeodeticPredicate {
    d: DistanceMatrix,
}

impl GeodeticPredicate {
    pub fn new(g: &Graph) -> Self {
        GeodeticPredicate { d: g.distances() }
    }
}

impl MonotonePredicate for GeodeticPredicate {
    fn ground_size(&self) -> usize {
        self.d.n()
    }

    fn holds(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        (0..self.d.n()).all(|v| {
            s.contains(v)
                || members
                    .iter()
                    .tuple_combinations()
                    .any(|(&x, &y)| self.d.on_shortest_path(x, v, y))
        })
    }
}

/// Every pair `u, v` has a member `w` with `u` on a shortest `w`-`v` path
/// or `v` on a shortest `w`-`u` path.
pub struct StrongResolvingPredicate {
    d: DistanceMatrix,
}

impl StrongResolvingPredicate {
    pub fn new(g: &Graph) -> Self {
        StrongResolvingPredicate { d: g.distances() }
    }
}

impl MonotonePredicate for StrongResolvingPredicate {
    fn ground_size(&self) -> usize {
        self.d.n()
    }

    fn holds(&self, s: &VertexSet) -> bool {
        (0..self.d.n()).tuple_combinations().all(|(u, v)| {
            s.iter()
                .any(|w| self.d.on_shortest_path(w, u, v) || self.d.on_shortest_path(w, v, u))
        })
    }
}

/// Inclusion-minimal subsets satisfying `p`, sorted. Subsets are visited by
/// ascending size; for monotone predicates supersets of known solutions are
/// skipped without evaluation.
pub fn brute_minimal_solutions<P: MonotonePredicate + ?Sized>(
    p: &P,
    limit: usize,
) -> Result<Vec<VertexSet>> {
    let n = p.ground_size();
    if n > limit || n > 63 {
        return Err(Error::SizeLimit {
            size: n,
            limit: limit.min(63),
        });
    }
    let monotone = p.is_monotone();
    let mut satisfied: Vec<u64> = Vec::new();
    let mut minimal: Vec<u64> = Vec::new();
    for k in 0..=n {
        for combo in (0..n).combinations(k) {
            let mask = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            let dominated = |known: &[u64]| known.iter().any(|&f| f & !mask == 0);
            if monotone {
                if dominated(&minimal) {
                    continue;
                }
                if p.holds(&VertexSet::from_mask(mask)) {
                    minimal.push(mask);
                }
            } else if p.holds(&VertexSet::from_mask(mask)) {
                if !dominated(&satisfied) {
                    minimal.push(mask);
                }
                satisfied.push(mask);
            }
        }
    }
    let mut out: Vec<VertexSet> = minimal.into_iter().map(VertexSet::from_mask).collect();
    out.sort();
    Ok(out)
}

/// Node sets of the pair hypergraph that are consistent transversals and
/// minimal among consistent transversals, sorted. Searched through vertex
/// subsets, since consistent node sets are exactly pair families.
pub fn brute_minimal_consistent_transversals(
    ph: &PairHypergraph,
    limit: usize,
) -> Result<Vec<VertexSet>> {
    let n = ph.vertices();
    if n > limit {
        return Err(Error::SizeLimit { size: n, limit });
    }
    let h = ph.hypergraph();
    let mut found: Vec<VertexSet> = Vec::new();
    for k in 0..=n {
        for combo in (0..n).combinations(k) {
            let nodes = ph.pairs_of(&combo.iter().collect());
            if found.iter().any(|f| f.is_subset(&nodes)) {
                continue;
            }
            if h.edges().iter().all(|e| e.intersects(&nodes)) {
                found.push(nodes);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// Samples satisfying sets and checks that adding a vertex keeps the
/// property. Returns a counterexample `(set, added vertex)`.
pub fn spot_check_monotone<P: MonotonePredicate + ?Sized, R: Rng>(
    p: &P,
    samples: usize,
    rng: &mut R,
) -> Option<(VertexSet, usize)> {
    let n = p.ground_size();
    if n == 0 {
        return None;
    }
    for _ in 0..samples {
        let s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !p.holds(&s) {
            continue;
        }
        let v = rng.gen_range(0..n);
        let mut t = s.clone();
        t.insert(v);
        if !p.holds(&t) {
            return Some((s, v));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::vertex_set::vset;
    use rand::SeedableRng;

    struct ExactlyTwo(usize);

    impl MonotonePredicate for ExactlyTwo {
        fn ground_size(&self) -> usize {
            self.0
        }
        fn holds(&self, s: &VertexSet) -> bool {
            s.len() == 2
        }
        fn is_monotone(&self) -> bool {
            false
        }
    }

    fn is_antichain(family: &[VertexSet]) -> bool {
        family
            .iter()
            .enumerate()
            .all(|(i, a)| family.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(b)))
    }

    #[test]
    fn h1_and_h2_counts() {
        let tr1 = brute_minimal_solutions(&TransversalPredicate::new(&generators::h1()), 20).unwrap();
        let tr2 = brute_minimal_solutions(&TransversalPredicate::new(&generators::h2()), 20).unwrap();
        assert_eq!(tr1.len(), 11);
        assert_eq!(tr2.len(), 7);
        assert!(is_antichain(&tr1) && is_antichain(&tr2));
    }

    #[test]
    fn small_metric_answers() {
        let p3 = generators::path(3);
        assert_eq!(brute_minimal_solutions(&ResolvingPredicate::new(&p3), 20).unwrap(), vec![vset(&[0]), vset(&[2])]);
        assert_eq!(brute_minimal_solutions(&GeodeticPredicate::new(&p3), 20).unwrap(), vec![vset(&[0, 2])]);
        assert_eq!(
            brute_minimal_solutions(&GeodeticPredicate::new(&generators::triangle_pendant()), 20).unwrap(),
            vec![vset(&[0, 1, 3])]
        );
        // the Petersen graph has metric dimension 3
        let pet = brute_minimal_solutions(&ResolvingPredicate::new(&generators::petersen()), 20).unwrap();
        assert_eq!(pet.iter().map(VertexSet::len).min(), Some(3));
    }

    #[test]
    fn non_monotone_predicates_use_a_full_scan() {
        let got = brute_minimal_solutions(&ExactlyTwo(3), 20).unwrap();
        assert_eq!(got, vec![vset(&[0, 1]), vset(&[0, 2]), vset(&[1, 2])]);
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        assert!(spot_check_monotone(&ExactlyTwo(5), 500, &mut rng).is_some());
        let g = generators::petersen();
        assert!(spot_check_monotone(&ResolvingPredicate::new(&g), 500, &mut rng).is_none());
        assert!(spot_check_monotone(&GeodeticPredicate::new(&g), 500, &mut rng).is_none());
    }

    #[test]
    fn size_limit() {
        let h = Hypergraph::new(30, vec![]);
        assert_eq!(
            brute_minimal_solutions(&TransversalPredicate::new(&h), 20),
            Err(Error::SizeLimit { size: 30, limit: 20 })
        );
    }
}
