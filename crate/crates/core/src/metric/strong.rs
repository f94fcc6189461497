use super::require_connected;
use crate::class::{classify_with, SolutionClass};
use crate::engine::{enumerate_minimal_vertex_covers, BoxedStream};
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

/// Mutually maximally distant pairs: no neighbor of `v` is farther from `u`
/// than `v`, and vice versa.
pub fn mmd_graph(g: &Graph) -> Result<Graph> {
    require_connected(g)?;
    let d = g.distances();
    let n = g.n();
    let mut h = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let duv = d.get(u, v);
            let v_far = g.neighbors(v).iter().all(|w| d.get(u, w) <= duv);
            let u_far = g.neighbors(u).iter().all(|w| d.get(w, v) <= duv);
            if v_far && u_far {
                h.connect(u, v);
            }
        }
    }
    Ok(h)
}

/// Strong resolving sets are the vertex covers of the mutually maximally
/// distant graph.
pub fn enumerate_minimal_strong_resolving_sets(g: &Graph) -> Result<BoxedStream> {
    Ok(Box::new(enumerate_minimal_vertex_covers(&mmd_graph(g)?)))
}

/// The first pair `u < v` for which no member `w` of `s` has `u` on a
/// shortest `w`-`v` path or `v` on a shortest `w`-`u` path.
pub fn strong_resolving_failure(d: &DistanceMatrix, s: &VertexSet) -> Option<(usize, usize)> {
    let n = d.n();
    for u in 0..n {
        for v in u + 1..n {
            if !s.iter().any(|w| d.on_shortest_path(w, u, v) || d.on_shortest_path(w, v, u)) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Direct check of the definition; failures carry an unresolved pair.
pub fn classify_strong_resolving(g: &Graph, s: &VertexSet) -> Result<SolutionClass<(usize, usize)>> {
    require_connected(g)?;
    let d = g.distances();
    Ok(classify_with(s, |t| strong_resolving_failure(&d, t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::oracle::{brute_minimal_solutions, StrongResolvingPredicate};
    use crate::vertex_set::vset;
    use proptest::prelude::*;

    fn all(g: &Graph) -> Vec<VertexSet> {
        let mut v: Vec<_> = enumerate_minimal_strong_resolving_sets(g).unwrap().collect();
        v.sort();
        v
    }

    #[test]
    fn mmd_examples() {
        assert_eq!(mmd_graph(&generators::path(3)).unwrap().edges(), vec![(0, 2)]);
        assert_eq!(mmd_graph(&generators::cycle(4)).unwrap().edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(mmd_graph(&generators::complete(5)).unwrap(), generators::complete(5));
        assert!(mmd_graph(&Graph::new(3)).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(all(&generators::path(3)), vec![vset(&[0]), vset(&[2])]);
        assert_eq!(
            all(&generators::cycle(4)),
            vec![vset(&[0, 1]), vset(&[0, 3]), vset(&[1, 2]), vset(&[2, 3])]
        );
        assert_eq!(
            all(&generators::complete(4)),
            vec![vset(&[0, 1, 2]), vset(&[0, 1, 3]), vset(&[0, 2, 3]), vset(&[1, 2, 3])]
        );
    }

    #[test]
    fn classify_examples() {
        let p3 = generators::path(3);
        assert!(classify_strong_resolving(&p3, &vset(&[0])).unwrap().is_minimal());
        assert_eq!(
            classify_strong_resolving(&p3, &vset(&[1])).unwrap(),
            SolutionClass::NotSolution((0, 2))
        );
        assert!(classify_strong_resolving(&generators::cycle(4), &vset(&[0, 1])).unwrap().is_minimal());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cover_view_agrees_with_definition(seed in any::<u64>(), n in 1usize..=9) {
            use rand::SeedableRng;
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let g = generators::random_connected_graph(n, 0.3, &mut rng);
            let mmd = mmd_graph(&g).unwrap();
            let is_cover = |s: &VertexSet| mmd.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v));
            for mask in 0u64..1 << n {
                let s = VertexSet::from_mask(mask);
                let class = classify_strong_resolving(&g, &s).unwrap();
                prop_assert_eq!(class.is_solution(), is_cover(&s));
                let minimal_cover = is_cover(&s) && s.iter().all(|x| {
                    let mut t = s.clone();
                    t.remove(x);
                    !is_cover(&t)
                });
                prop_assert_eq!(class.is_minimal(), minimal_cover);
            }
            let oracle = brute_minimal_solutions(&StrongResolvingPredicate::new(&g), 20).unwrap();
            prop_assert_eq!(all(&g), oracle);
        }
    }
}
