use itertools::Itertools;

use super::{bit_indices, log2_exact, ReductionArtifact, ReductionKind, Role};
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::oracle::{
    GeodeticPredicate, MonotonePredicate, ResolvingPredicate, StrongResolvingPredicate,
    TransversalPredicate,
};
use crate::vertex_set::VertexSet;

pub const DEFAULT_EXT_LIMIT: usize = 24;

/// A gadget graph with required and forbidden vertices whose extension
/// answer equals that of the source hypergraph with its own required and
/// forbidden vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtInstance {
    pub artifact: ReductionArtifact,
    pub required: VertexSet,
    pub forbidden: VertexSet,
    pub source_required: VertexSet,
    pub source_forbidden: VertexSet,
}

impl ExtInstance {
    pub fn graph(&self) -> &Graph {
        &self.artifact.graph
    }
}

fn check_disjoint(a: &VertexSet, b: &VertexSet) -> Result<()> {
    match a.first_common(b) {
        Some(v) => Err(Error::InvalidInput(format!(
            "vertex {} is both required and forbidden",
            v + 1
        ))),
        None => Ok(()),
    }
}

fn check_in_range(h: &Hypergraph, s: &VertexSet) -> Result<()> {
    match s.last() {
        Some(v) if v >= h.n() => Err(precondition(format!("vertex {} out of range", v + 1))),
        _ => Ok(()),
    }
}

/// Layout: `V` (n), `H` (m), `a`, `b`, `c`. Starts from the incidence
/// co-bipartite graph; `a` is complete to `H`, `b` complete to `V` and
/// adjacent to `a`, `c` complete to `H u V` and adjacent to `a`.
/// Required: `A u {a, b, c}`; forbidden: `B u H`.
pub fn build_ext_geodetic_instance(h: &Hypergraph, a: &VertexSet, b: &VertexSet) -> Result<ExtInstance> {
    check_disjoint(a, b)?;
    check_in_range(h, a)?;
    check_in_range(h, b)?;
    let (n, m) = (h.n(), h.m());
    if n == 0 || m == 0 {
        return Err(precondition("need at least one vertex and one edge"));
    }
    if h.is_minimal_transversal(&VertexSet::full(n)) {
        return Err(precondition("the full vertex set is a minimal transversal"));
    }
    let mut roles: Vec<Role> = (1..=n).map(Role::V).collect();
    roles.extend((1..=m).map(Role::E));
    roles.extend([Role::A, Role::B, Role::C]);
    let (va, vb, vc) = (n + m, n + m + 1, n + m + 2);
    let v_side: Vec<usize> = (0..n).collect();
    let h_side: Vec<usize> = (n..n + m).collect();

    let mut g = Graph::new(roles.len());
    g.make_clique(&v_side);
    g.make_clique(&h_side);
    for j in 0..m {
        for i in h.edge(j).iter() {
            g.connect(i, n + j);
        }
    }
    g.connect_all(&[va], &h_side);
    g.connect_all(&[vb], &v_side);
    g.connect_all(&[vc], &v_side);
    g.connect_all(&[vc], &h_side);
    g.connect(va, vb);
    g.connect(va, vc);

    let artifact = ReductionArtifact::new(g, roles, h.clone(), ReductionKind::ExtGeodetic);
    let mut required = artifact.lift(a);
    required.extend([va, vb, vc]);
    let forbidden = artifact.lift(b).union(&h_side.iter().collect());
    Ok(ExtInstance {
        artifact,
        required,
        forbidden,
        source_required: a.clone(),
        source_forbidden: b.clone(),
    })
}

/// Layout: `V` (n), `H` (m), `H'` (m), `u1 u'1 u2 u'2 ...` for `log(n+1)`
/// pairs, `W` (`log(m+1)`), `U*` (n). Starts from the non-incidence
/// bipartite graph; `H'` is complete to `V`; `v_i` sees `u'_k`, `e_j` and
/// `e'_j` see `w_k`, and `u*_i` sees `u_k` for the set bits `k`; `u_k u'_k`
/// are edges; `U' u U* u H u H'` is a clique.
/// Required: `A u U u W`; forbidden: `B u U' u U* u H u H'`.
pub fn build_ext_resolving_instance(h: &Hypergraph, a: &VertexSet, b: &VertexSet) -> Result<ExtInstance> {
    check_disjoint(a, b)?;
    check_in_range(h, a)?;
    check_in_range(h, b)?;
    let (n, m) = (h.n(), h.m());
    let lu = log2_exact(n + 1)
        .ok_or_else(|| precondition(format!("{} vertices: n + 1 is not a power of two", n)))?;
    let lw = log2_exact(m + 1)
        .ok_or_else(|| precondition(format!("{} edges: m + 1 is not a power of two", m)))?;
    if !h.is_ext_resolving_ready(b) {
        return Err(precondition(
            "need at least 3 vertices and edges, a last edge holding only the last vertex, and that vertex not forbidden",
        ));
    }
    let mut roles: Vec<Role> = (1..=n).map(Role::V).collect();
    roles.extend((1..=m).map(Role::E));
    roles.extend((1..=m).map(Role::EPrime));
    for k in 1..=lu {
        roles.extend([Role::U(k), Role::UPrime(k)]);
    }
    roles.extend((1..=lw).map(Role::W));
    roles.extend((1..=n).map(Role::UStar));
    let e = |j: usize| n + j - 1;
    let e2 = |j: usize| n + m + j - 1;
    let u = |k: usize| n + 2 * m + 2 * (k - 1);
    let w = |k: usize| n + 2 * m + 2 * lu + k - 1;
    let us = |i: usize| n + 2 * m + 2 * lu + lw + i - 1;

    let mut g = Graph::new(roles.len());
    for i in 1..=n {
        for j in 1..=m {
            if !h.edge(j - 1).contains(i - 1) {
                g.connect(i - 1, e(j));
            }
            g.connect(i - 1, e2(j));
        }
        for k in bit_indices(i) {
            g.connect(i - 1, u(k) + 1);
            g.connect(us(i), u(k));
        }
    }
    for j in 1..=m {
        for k in bit_indices(j) {
            g.connect(e(j), w(k));
            g.connect(e2(j), w(k));
        }
    }
    for k in 1..=lu {
        g.connect(u(k), u(k) + 1);
    }
    let clique: Vec<usize> = (1..=lu)
        .map(|k| u(k) + 1)
        .chain((1..=n).map(us))
        .chain((1..=m).map(e))
        .chain((1..=m).map(e2))
        .collect();
    g.make_clique(&clique);

    let artifact = ReductionArtifact::new(g, roles, h.clone(), ReductionKind::ExtResolving);
    let required = artifact
        .lift(a)
        .union(&artifact.vertices_where(|r| matches!(r, Role::U(_) | Role::W(_))));
    let forbidden = artifact.lift(b).union(&clique.iter().collect());
    Ok(ExtInstance {
        artifact,
        required,
        forbidden,
        source_required: a.clone(),
        source_forbidden: b.clone(),
    })
}

impl ReductionArtifact {
    /// `U u W u {v_n}` for an extension resolving gadget.
    pub fn ext_resolving_core(&self) -> VertexSet {
        let mut z = self.vertices_where(|r| matches!(r, Role::U(_) | Role::W(_)));
        z.insert(self.source.n() - 1);
        z
    }
}

/// Which predicate an extension query is about.
#[derive(Clone, Copy)]
pub enum ExtTarget<'a> {
    Transversals(&'a Hypergraph),
    Geodetic(&'a Graph),
    Resolving(&'a Graph),
    StrongResolving(&'a Graph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtAnswer {
    Yes(VertexSet),
    No,
}

impl ExtAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, ExtAnswer::Yes(_))
    }
}

/// Is there a minimal solution containing `required` and avoiding
/// `forbidden`? Searches subsets of the remaining vertices by ascending
/// size, skipping supersets of any solution already seen. A `Yes` witness
/// is re-verified before it is returned.
pub fn ext_check(
    target: ExtTarget<'_>,
    required: &VertexSet,
    forbidden: &VertexSet,
    limit: usize,
) -> Result<ExtAnswer> {
    check_disjoint(required, forbidden)?;
    let predicate: Box<dyn MonotonePredicate + '_> = match target {
        ExtTarget::Transversals(h) => Box::new(TransversalPredicate::new(h)),
        ExtTarget::Geodetic(g) => {
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            Box::new(GeodeticPredicate::new(g))
        }
        ExtTarget::Resolving(g) => Box::new(ResolvingPredicate::new(g)),
        ExtTarget::StrongResolving(g) => {
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            Box::new(StrongResolvingPredicate::new(g))
        }
    };
    let n = predicate.ground_size();
    if required.union(forbidden).last().is_some_and(|v| v >= n) {
        return Err(Error::InvalidInput("vertex out of range".into()));
    }
    let free: Vec<usize> = (0..n)
        .filter(|&v| !required.contains(v) && !forbidden.contains(v))
        .collect();
    if free.len() > limit {
        return Err(Error::SizeLimit {
            size: free.len(),
            limit,
        });
    }
    let minimal = |s: &VertexSet| {
        s.iter().all(|x| {
            let mut t = s.clone();
            t.remove(x);
            !predicate.holds(&t)
        })
    };
    let mut satisfied: Vec<u32> = Vec::new();
    for k in 0..=free.len() {
        for combo in (0..free.len()).combinations(k) {
            let mask = combo.iter().fold(0u32, |m, &i| m | 1 << i);
            if satisfied.iter().any(|&f| f & !mask == 0) {
                continue;
            }
            let mut s = required.clone();
            s.extend(combo.iter().map(|&i| free[i]));
            if !predicate.holds(&s) {
                continue;
            }
            if minimal(&s) {
                assert!(required.is_subset(&s) && s.is_disjoint(forbidden));
                return Ok(ExtAnswer::Yes(s));
            }
            satisfied.push(mask);
        }
    }
    Ok(ExtAnswer::No)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::metric::resolving_failure;
    use crate::vertex_set::vset;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn source_answer(h: &Hypergraph, a: &VertexSet, b: &VertexSet) -> ExtAnswer {
        ext_check(ExtTarget::Transversals(h), a, b, DEFAULT_EXT_LIMIT).unwrap()
    }

    #[test]
    fn transversal_examples() {
        let h2 = generators::h2();
        assert_eq!(source_answer(&h2, &vset(&[0]), &vset(&[1])), ExtAnswer::Yes(vset(&[0, 2, 3])));
        assert_eq!(source_answer(&h2, &vset(&[0, 1]), &vset(&[])), ExtAnswer::No);
        assert!(source_answer(&h2, &vset(&[]), &vset(&[])).is_yes());
        assert!(matches!(
            ext_check(ExtTarget::Transversals(&h2), &vset(&[0]), &vset(&[0]), 24),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn geodetic_gadget_examples() {
        let h2 = generators::h2();
        for (a, b, yes) in [(vset(&[0]), vset(&[1]), true), (vset(&[0, 1]), vset(&[]), false), (vset(&[]), vset(&[]), true)] {
            let inst = build_ext_geodetic_instance(&h2, &a, &b).unwrap();
            let ans = ext_check(ExtTarget::Geodetic(inst.graph()), &inst.required, &inst.forbidden, 24).unwrap();
            assert_eq!(ans.is_yes(), yes);
            if let ExtAnswer::Yes(s) = ans {
                assert!(source_answer(&h2, &a, &b).is_yes());
                assert!(h2.is_minimal_transversal(&inst.artifact.project(&s)));
            }
        }
        let full_is_minimal = Hypergraph::from_one_based(2, &[&[1], &[2]]);
        assert!(build_ext_geodetic_instance(&full_is_minimal, &vset(&[]), &vset(&[])).is_err());
    }

    #[test]
    fn resolving_gadget_examples() {
        let h = Hypergraph::from_one_based(3, &[&[1, 2], &[2, 3], &[3]]);
        let inst = build_ext_resolving_instance(&h, &vset(&[0]), &vset(&[1])).unwrap();
        let ans = ext_check(ExtTarget::Resolving(inst.graph()), &inst.required, &inst.forbidden, 24).unwrap();
        let ExtAnswer::Yes(s) = ans else { panic!("expected a witness") };
        assert_eq!(inst.artifact.project(&s), vset(&[0, 2]));
        let inst = build_ext_resolving_instance(&h, &vset(&[0, 1]), &vset(&[])).unwrap();
        let ans = ext_check(ExtTarget::Resolving(inst.graph()), &inst.required, &inst.forbidden, 24).unwrap();
        assert_eq!(ans, ExtAnswer::No);
        let four = Hypergraph::from_one_based(4, &[&[1, 2], &[2, 3], &[4]]);
        assert!(matches!(
            build_ext_resolving_instance(&four, &vset(&[]), &vset(&[])),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn core_set_misses_exactly_edge_copies_avoiding_the_last_vertex() {
        let h = Hypergraph::from_one_based(3, &[&[1, 2], &[2, 3], &[3]]);
        let inst = build_ext_resolving_instance(&h, &vset(&[]), &vset(&[])).unwrap();
        let r = &inst.artifact;
        let d = r.graph.distances();
        let z = r.ext_resolving_core();
        let missed: Vec<(usize, usize)> = (0..r.graph.n())
            .tuple_combinations()
            .filter(|&(x, y)| z.iter().all(|w| d.get(x, w) == d.get(y, w)))
            .collect();
        let expected: Vec<(usize, usize)> = r
            .edge_copy_pairs()
            .into_iter()
            .enumerate()
            .filter(|&(j, _)| !h.edge(j).contains(2))
            .map(|(_, p)| p)
            .collect();
        assert_eq!(missed, expected);
        assert!(resolving_failure(&d, &z).is_some());
    }

    #[test]
    fn tiny_instances_break_the_resolving_gadget() {
        // one vertex, one edge: the twin-free core already resolves everything
        let h = Hypergraph::from_one_based(1, &[&[1]]);
        assert!(!h.is_ext_resolving_ready(&vset(&[])));
        assert!(build_ext_resolving_instance(&h, &vset(&[]), &vset(&[])).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn geodetic_gadget_preserves_answers(seed in any::<u64>()) {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            use rand::Rng;
            let n = rng.gen_range(1..=6);
            let m = rng.gen_range(1..=5);
            let h = generators::random_hypergraph(n, m, 0.4, &mut rng);
            prop_assume!(!h.is_minimal_transversal(&VertexSet::full(n)));
            let (a, b) = generators::random_partial_assignment(n, &mut rng);
            let inst = build_ext_geodetic_instance(&h, &a, &b).unwrap();
            let gadget = ext_check(ExtTarget::Geodetic(inst.graph()), &inst.required, &inst.forbidden, 24).unwrap();
            prop_assert_eq!(gadget.is_yes(), source_answer(&h, &a, &b).is_yes());
        }

        #[test]
        fn resolving_gadget_preserves_answers(seed in any::<u64>()) {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            use rand::Rng;
            let n = rng.gen_range(1..=5);
            let m = rng.gen_range(1..=4);
            let h = generators::random_hypergraph(n, m, 0.4, &mut rng);
            let (a, b) = generators::random_partial_assignment(n, &mut rng);
            let (padded, pa, pb) = h.pad_for_ext_resolving_reduction(&a, &b).unwrap();
            let inst = build_ext_resolving_instance(&padded, &pa, &pb).unwrap();
            let gadget = ext_check(ExtTarget::Resolving(inst.graph()), &inst.required, &inst.forbidden, 24).unwrap();
            prop_assert_eq!(gadget.is_yes(), source_answer(&h, &a, &b).is_yes());
            prop_assert_eq!(source_answer(&padded, &pa, &pb).is_yes(), source_answer(&h, &a, &b).is_yes());
        }
    }
}
