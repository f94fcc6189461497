use super::require_connected;
use crate::class::{classify_with, SolutionClass};
use crate::engine::{enumerate_minimal_transversals, BoxedStream, EngineChoice, MapStream, SolutionStream};
use crate::error::{Error, Result};
use crate::graph::{Graph, SplitPartition};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_GENERAL_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeodeticOptions {
    /// Largest graph accepted by the general (non-split) search.
    pub general_limit: usize,
    /// Skip the split fast path even when it applies.
    pub force_general: bool,
    pub engine: EngineChoice,
}

impl Default for GeodeticOptions {
    fn default() -> Self {
        GeodeticOptions {
            general_limit: DEFAULT_GENERAL_LIMIT,
            force_general: false,
            engine: EngineChoice::default(),
        }
    }
}

/// Shortest-path intervals of all pairs, for repeated coverage queries.
struct Intervals {
    n: usize,
    interval: Vec<VertexSet>,
}

impl Intervals {
    fn new(g: &Graph) -> Self {
        let d = g.distances();
        let n = g.n();
        let mut interval = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                interval.push(d.interval(x, y));
            }
        }
        Intervals { n, interval }
    }

    /// Vertices covered by `s`, counting one tick per pair.
    fn covered(&self, s: &VertexSet, ticks: &mut u64) -> VertexSet {
        let members = s.to_vec();
        let mut cov = s.clone();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                *ticks += 1;
                cov.union_with(&self.interval[x * self.n + y]);
            }
        }
        cov
    }

    fn is_geodetic(&self, s: &VertexSet, ticks: &mut u64) -> bool {
        self.covered(s, ticks).len() == self.n
    }
}

/// The highest vertex not covered by `s`.
pub fn geodetic_failure(g: &Graph, s: &VertexSet) -> Option<usize> {
    let d = g.distances();
    let members = s.to_vec();
    (0..g.n()).rev().find(|&v| {
        !s.contains(v)
            && !members
                .iter()
                .enumerate()
                .any(|(i, &x)| members[i + 1..].iter().any(|&y| d.on_shortest_path(x, v, y)))
    })
}

/// Failures carry an uncovered vertex; private witnesses are vertices
/// covered only with that member's participation.
pub fn classify_geodetic(g: &Graph, s: &VertexSet) -> Result<SolutionClass<usize>> {
    require_connected(g)?;
    Ok(classify_with(s, |t| geodetic_failure(g, t)))
}

/// Minimal geodetic sets of a split graph as `mandatory` plus a minimal
/// transversal of `hypergraph` (whose edges lie in the clique side).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGeodetic {
    pub mandatory: VertexSet,
    pub hypergraph: Hypergraph,
}

/// Every geodetic set holds the independent side. A clique vertex `v` left
/// uncovered by it has a single independent neighbor `u`, and is covered
/// exactly by `v` itself or a clique vertex outside `N(u)`.
pub fn split_geodetic_hypergraph(g: &Graph, p: &SplitPartition) -> Result<SplitGeodetic> {
    if !p.is_valid_for(g) {
        return Err(Error::PreconditionViolation("not a split partition of the graph".into()));
    }
    if p.independent.len() <= 1 {
        return Err(Error::TrivialInstance(p.independent.len()));
    }
    require_connected(g)?;
    let intervals = Intervals::new(g);
    let covered = intervals.covered(&p.independent, &mut 0);
    let mut edges = Vec::new();
    for v in p.clique.iter().filter(|&v| !covered.contains(v)) {
        let owners = g.neighbors(v).intersection(&p.independent);
        let (1, Some(u)) = (owners.len(), owners.first()) else {
            return Err(Error::PreconditionViolation(
                "independent side is not maximum".into(),
            ));
        };
        let mut edge = p.clique.difference(g.neighbors(u));
        edge.insert(v);
        edges.push(edge);
    }
    Ok(SplitGeodetic {
        mandatory: p.independent.clone(),
        hypergraph: Hypergraph::new(g.n(), edges),
    })
}

/// Streams the minimal geodetic sets: split graphs with at least two
/// independent vertices go through transversals, everything else through
/// [`GeodeticStream`].
pub fn enumerate_minimal_geodetic_sets(g: &Graph, opts: &GeodeticOptions) -> Result<BoxedStream> {
    require_connected(g)?;
    if !opts.force_general {
        if let Some(p) = g.split_partition().filter(|p| p.independent.len() >= 2) {
            let split = split_geodetic_hypergraph(g, &p)?;
            let mandatory = split.mandatory;
            let inner = enumerate_minimal_transversals(&split.hypergraph, opts.engine)?;
            return Ok(Box::new(MapStream::new(
                inner,
                Box::new(move |t: VertexSet| t.union(&mandatory)),
            )));
        }
    }
    if g.n() > opts.general_limit {
        return Err(Error::SizeLimit {
            size: g.n(),
            limit: opts.general_limit,
        });
    }
    Ok(Box::new(GeodeticStream::new(g)))
}

/// Include/exclude search over vertices. Simplicial vertices lie inside no
/// shortest path, so they are forced in. A branch dies once its chosen
/// vertices plus all undecided ones stop being geodetic, and a branch ends
/// as soon as an inclusion makes the chosen set geodetic.
pub struct GeodeticStream {
    intervals: Intervals,
    order: Vec<usize>,
    /// `suffix[i]` = `order[i..]` as a set.
    suffix: Vec<VertexSet>,
    stack: Vec<(VertexSet, usize)>,
    ticks: u64,
    exhausted: bool,
}

impl GeodeticStream {
    pub fn new(g: &Graph) -> Self {
        let forced: VertexSet = (0..g.n()).filter(|&v| g.is_simplicial(v)).collect();
        let order: Vec<usize> = (0..g.n()).filter(|&v| !forced.contains(v)).collect();
        let mut suffix = vec![VertexSet::new(); order.len() + 1];
        for i in (0..order.len()).rev() {
            suffix[i] = suffix[i + 1].clone();
            suffix[i].insert(order[i]);
        }
        let mut stream = GeodeticStream {
            intervals: Intervals::new(g),
            order,
            suffix,
            stack: Vec::new(),
            ticks: 0,
            exhausted: false,
        };
        stream.stack.push((forced, 0));
        stream
    }

    fn is_minimal(&mut self, s: &VertexSet) -> bool {
        s.iter().all(|x| {
            let mut smaller = s.clone();
            smaller.remove(x);
            !self.intervals.is_geodetic(&smaller, &mut self.ticks)
        })
    }
}

impl Iterator for GeodeticStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.exhausted {
            return None;
        }
        if self.ticks == 0 {
            // root: the forced vertices alone may already suffice
            let (forced, _) = self.stack[0].clone();
            self.ticks = 1;
            if self.intervals.is_geodetic(&forced, &mut self.ticks) {
                self.stack.clear();
                if self.is_minimal(&forced) {
                    return Some(forced);
                }
            }
        }
        while let Some((s, pos)) = self.stack.pop() {
            if pos == self.order.len() {
                continue;
            }
            let v = self.order[pos];
            let rest = s.union(&self.suffix[pos + 1]);
            if self.intervals.is_geodetic(&rest, &mut self.ticks) {
                self.stack.push((s.clone(), pos + 1));
            }
            let mut with = s;
            with.insert(v);
            if self.intervals.is_geodetic(&with, &mut self.ticks) {
                if self.is_minimal(&with) {
                    return Some(with);
                }
            } else {
                self.stack.push((with, pos + 1));
            }
        }
        self.exhausted = true;
        None
    }
}

impl SolutionStream for GeodeticStream {
    fn ticks(&self) -> u64 {
        self.ticks
    }

    fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::metric::pair_cover_hypergraph;
    use crate::oracle::{brute_minimal_consistent_transversals, brute_minimal_solutions, GeodeticPredicate};
    use crate::vertex_set::vset;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn all(g: &Graph, opts: &GeodeticOptions) -> Vec<VertexSet> {
        let mut v: Vec<_> = enumerate_minimal_geodetic_sets(g, opts).unwrap().collect();
        v.sort();
        v
    }

    fn general() -> GeodeticOptions {
        GeodeticOptions {
            force_general: true,
            ..GeodeticOptions::default()
        }
    }

    #[test]
    fn enumeration_examples() {
        let tp = generators::triangle_pendant();
        assert_eq!(all(&tp, &GeodeticOptions::default()), vec![vset(&[0, 1, 3])]);
        assert_eq!(all(&tp, &general()), vec![vset(&[0, 1, 3])]);
        assert_eq!(all(&generators::path(3), &general()), vec![vset(&[0, 2])]);
        assert_eq!(all(&generators::path(3), &GeodeticOptions::default()), vec![vset(&[0, 2])]);
        assert_eq!(
            enumerate_minimal_geodetic_sets(&Graph::new(2), &GeodeticOptions::default()).err(),
            Some(Error::Disconnected)
        );
    }

    #[test]
    fn classify_examples() {
        let tp = generators::triangle_pendant();
        assert!(classify_geodetic(&tp, &vset(&[0, 1, 3])).unwrap().is_minimal());
        assert!(matches!(
            classify_geodetic(&tp, &vset(&[0, 1, 2, 3])).unwrap(),
            SolutionClass::NotMinimal { .. }
        ));
        assert_eq!(
            classify_geodetic(&tp, &vset(&[0, 1])).unwrap(),
            SolutionClass::NotSolution(3)
        );
    }

    #[test]
    fn split_examples() {
        let star = generators::star(3);
        let p = star.split_partition().unwrap();
        let split = split_geodetic_hypergraph(&star, &p).unwrap();
        assert_eq!(split.mandatory, vset(&[1, 2, 3]));
        assert_eq!(split.hypergraph.m(), 0);
        assert_eq!(all(&star, &GeodeticOptions::default()), vec![vset(&[1, 2, 3])]);

        let k2 = generators::complete(2);
        let p = SplitPartition {
            clique: vset(&[1]),
            independent: vset(&[0]),
        };
        assert_eq!(split_geodetic_hypergraph(&k2, &p), Err(Error::TrivialInstance(1)));
    }

    #[test]
    fn size_limit_applies_to_general_path() {
        let g = generators::cycle(6);
        let opts = GeodeticOptions {
            general_limit: 5,
            ..GeodeticOptions::default()
        };
        assert_eq!(
            enumerate_minimal_geodetic_sets(&g, &opts).err(),
            Some(Error::SizeLimit { size: 6, limit: 5 })
        );
    }

    fn random_split_graph(n: usize, rng: &mut rand::rngs::StdRng) -> Graph {
        use rand::Rng;
        let k = rng.gen_range(1..n);
        let mut g = Graph::new(n);
        g.make_clique(&(0..k).collect::<Vec<_>>());
        for v in k..n {
            for u in 0..k {
                if rng.gen_bool(0.4) {
                    g.connect(u, v);
                }
            }
            if g.degree(v) == 0 {
                g.connect(rng.gen_range(0..k), v);
            }
        }
        g
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn general_path_matches_oracle(seed in any::<u64>(), n in 1usize..=9) {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let g = generators::random_connected_graph(n, 0.3, &mut rng);
            let oracle = brute_minimal_solutions(&GeodeticPredicate::new(&g), 20).unwrap();
            prop_assert_eq!(all(&g, &general()), oracle.clone());
            prop_assert_eq!(all(&g, &GeodeticOptions::default()), oracle);
        }

        #[test]
        fn split_path_matches_oracle(seed in any::<u64>(), n in 3usize..=12) {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let g = random_split_graph(n, &mut rng);
            let p = g.split_partition().unwrap();
            prop_assume!(p.independent.len() >= 2);
            let split = split_geodetic_hypergraph(&g, &p).unwrap();
            let mut via: Vec<_> = enumerate_minimal_transversals(&split.hypergraph, EngineChoice::default())
                .unwrap()
                .map(|t| t.union(&split.mandatory))
                .collect();
            via.sort();
            let oracle = brute_minimal_solutions(&GeodeticPredicate::new(&g), 20).unwrap();
            prop_assert_eq!(via, oracle);
        }

        #[test]
        fn pair_families_biject_with_consistent_transversals(seed in any::<u64>(), n in 2usize..=7) {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let g = generators::random_connected_graph(n, 0.3, &mut rng);
            let ph = pair_cover_hypergraph(&g).unwrap();
            let geodetic = brute_minimal_solutions(&GeodeticPredicate::new(&g), 20).unwrap();
            let mut forward: Vec<_> = geodetic.iter().map(|s| ph.pairs_of(s)).collect();
            forward.sort();
            let consistent = brute_minimal_consistent_transversals(&ph, 10).unwrap();
            prop_assert_eq!(&forward, &consistent);
            let mut back: Vec<_> = consistent.iter().map(|nodes| ph.union_of(nodes)).collect();
            back.sort();
            prop_assert_eq!(back, geodetic);
        }
    }
}
