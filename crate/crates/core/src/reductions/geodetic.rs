use super::recovery::TransversalRecovery;
use super::{DecodedSolution, ReductionArtifact, ReductionKind, Role};
use crate::engine::BoxedStream;
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Builds the split geodetic gadget.
///
/// Layout: `V` (n), `H` (m), `U` (m, with `u_j` pendant on `e_j`), `e*`,
/// `u*`. `v_i e_j` is an edge iff `v_i` is not in `E_j`; `U u V` is a
/// clique; `e*` is complete to `V`; `u*` is universal. The clique side is
/// `U u V u {u*}` and the independent side `H u {e*}`.
pub fn build_mingeodetic_instance(h: &Hypergraph) -> Result<ReductionArtifact> {
    let (n, m) = (h.n(), h.m());
    if n == 0 || m == 0 {
        return Err(precondition("need at least one vertex and one edge"));
    }
    if let Some(j) = h.first_empty_edge() {
        return Err(precondition(format!("edge {} is empty", j + 1)));
    }
    if let Some(v) = (0..n).find(|&v| h.edges().iter().all(|e| e.contains(v))) {
        return Err(precondition(format!("vertex {} lies in every edge", v + 1)));
    }
    let mut roles: Vec<Role> = (1..=n).map(Role::V).collect();
    roles.extend((1..=m).map(Role::E));
    roles.extend((1..=m).map(Role::U));
    roles.extend([Role::EStar, Role::Universal]);
    let (e_star, u_star) = (n + 2 * m, n + 2 * m + 1);

    let mut g = Graph::new(roles.len());
    for j in 0..m {
        for i in 0..n {
            if !h.edge(j).contains(i) {
                g.connect(i, n + j);
            }
        }
        g.connect(n + m + j, n + j);
    }
    let clique: Vec<usize> = (0..n).chain(n + m..n + 2 * m).collect();
    g.make_clique(&clique);
    for i in 0..n {
        g.connect(e_star, i);
    }
    for x in 0..u_star {
        g.connect(u_star, x);
    }
    Ok(ReductionArtifact::new(g, roles, h.clone(), ReductionKind::GeodeticSplit))
}

impl ReductionArtifact {
    /// The independent side `H u {e*}` of a geodetic gadget, contained in
    /// every geodetic set.
    pub fn mandatory(&self) -> VertexSet {
        self.vertices_where(|r| matches!(r, Role::E(_) | Role::EStar))
    }
}

/// A minimal geodetic set of the gadget is the mandatory side plus either a
/// single pendant `u_j` or a minimal transversal.
pub fn decode_mingeodetic_solution(r: &ReductionArtifact, s: &VertexSet) -> Result<DecodedSolution> {
    if r.kind != ReductionKind::GeodeticSplit {
        return Err(Error::DecodeFailure(format!("expected a geodetic gadget, got {}", r.kind)));
    }
    let mandatory = r.mandatory();
    if !mandatory.is_subset(s) {
        return Err(Error::DecodeFailure("mandatory vertex missing".into()));
    }
    let rest = s.difference(&mandatory);
    let pendants: Vec<usize> = rest
        .iter()
        .filter_map(|v| match r.role(v) {
            Role::U(j) => Some(j),
            _ => None,
        })
        .collect();
    match pendants[..] {
        [] if rest.iter().all(|v| matches!(r.role(v), Role::V(_))) => {
            Ok(DecodedSolution::TransversalGeodetic(r.project(s)))
        }
        [j] if rest.len() == 1 => Ok(DecodedSolution::GarbageGeodetic(j)),
        _ => Err(Error::DecodeFailure("unexpected clique vertices".into())),
    }
}

/// Recovers the minimal transversals of the source from a stream of the
/// gadget's minimal geodetic sets. At most `m` solutions are garbage and
/// none repeat, so no memory of past outputs is kept.
pub fn transenum_via_mingeodetic(
    r: &ReductionArtifact,
    geodetic: BoxedStream,
) -> Result<TransversalRecovery> {
    if r.kind != ReductionKind::GeodeticSplit {
        return Err(precondition(format!("expected a geodetic gadget, got {}", r.kind)));
    }
    let artifact = r.clone();
    Ok(TransversalRecovery::new(
        geodetic,
        Box::new(move |s| decode_mingeodetic_solution(&artifact, s)),
        false,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::metric::{classify_geodetic, enumerate_minimal_geodetic_sets, split_geodetic_hypergraph, GeodeticOptions};
    use crate::oracle::{brute_minimal_solutions, GeodeticPredicate, TransversalPredicate};
    use crate::vertex_set::vset;

    #[test]
    fn h2_gadget_shape() {
        let r = build_mingeodetic_instance(&generators::h2()).unwrap();
        assert_eq!(r.graph.n(), 16);
        let p = r.graph.split_partition().unwrap();
        assert_eq!(p.independent, r.mandatory());
        let u_star = r.vertex(Role::Universal).unwrap();
        assert_eq!(r.graph.degree(u_star), 15);
        for j in 1..=4 {
            let u = r.vertex(Role::U(j)).unwrap();
            let h_side = r.vertices_where(|x| matches!(x, Role::E(_)));
            assert_eq!(r.graph.neighbors(u).intersection(&h_side), vset(&[r.vertex(Role::E(j)).unwrap()]));
        }
        let split = split_geodetic_hypergraph(&r.graph, &p).unwrap();
        let u_side = r.vertices_where(|x| matches!(x, Role::U(_)));
        let mut expected: Vec<VertexSet> = r.source.edges().iter().map(|e| r.lift(e).union(&u_side)).collect();
        expected.sort();
        let mut got = split.hypergraph.edges().to_vec();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn mandatory_side_is_in_every_geodetic_set() {
        let r = build_mingeodetic_instance(&generators::h2()).unwrap();
        let all = brute_minimal_solutions(&GeodeticPredicate::new(&r.graph), 20).unwrap();
        assert_eq!(all.len(), 4 + 7);
        assert!(all.iter().all(|s| r.mandatory().is_subset(s)));
    }

    #[test]
    fn decoding_examples() {
        let r = build_mingeodetic_instance(&generators::h2()).unwrap();
        let i = r.mandatory();
        let white = i.union(&r.lift(&vset(&[0, 2, 4])));
        assert!(classify_geodetic(&r.graph, &white).unwrap().is_minimal());
        assert_eq!(
            decode_mingeodetic_solution(&r, &white).unwrap(),
            DecodedSolution::TransversalGeodetic(vset(&[0, 2, 4]))
        );
        let mut garbage = i.clone();
        garbage.insert(r.vertex(Role::U(2)).unwrap());
        assert!(classify_geodetic(&r.graph, &garbage).unwrap().is_minimal());
        assert_eq!(decode_mingeodetic_solution(&r, &garbage).unwrap(), DecodedSolution::GarbageGeodetic(2));
        let pair = i.union(&r.lift(&vset(&[1, 4])));
        assert_eq!(
            decode_mingeodetic_solution(&r, &pair).unwrap(),
            DecodedSolution::TransversalGeodetic(vset(&[1, 4]))
        );
        assert!(matches!(
            decode_mingeodetic_solution(&r, &r.lift(&vset(&[1, 4]))),
            Err(Error::DecodeFailure(_))
        ));
    }

    #[test]
    fn pipeline_on_h2() {
        let h2 = generators::h2();
        let r = build_mingeodetic_instance(&h2).unwrap();
        let stream = enumerate_minimal_geodetic_sets(&r.graph, &GeodeticOptions::default()).unwrap();
        let mut rec = transenum_via_mingeodetic(&r, stream).unwrap();
        let mut got: Vec<_> = rec.by_ref().collect();
        got.sort();
        assert_eq!(got, brute_minimal_solutions(&TransversalPredicate::new(&h2), 20).unwrap());
        assert_eq!(rec.garbage(), 4);
        assert_eq!(rec.pulled(), 11);
    }

    #[test]
    fn preconditions() {
        let single = Hypergraph::from_one_based(1, &[&[1]]);
        assert!(matches!(build_mingeodetic_instance(&single), Err(Error::PreconditionViolation(_))));
        assert!(build_mingeodetic_instance(&Hypergraph::new(2, vec![])).is_err());
    }
}
