use itertools::Itertools;

use super::recovery::TransversalRecovery;
use super::{bit_indices, log2_exact, DecodedSolution, ReductionArtifact, ReductionKind, Role};
use crate::engine::BoxedStream;
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Builds the resolving gadget.
///
/// Layout: `V` (n), `H` (m), `H'` (m), then `u1 u'1 u2 u'2 ...` for
/// `log n + 1` twin pairs, then `w1 w'1 ...` for `log m + 1` twin pairs.
/// `V`, `H`, `H'` are cliques; `v_i e_j` is an edge iff `v_i` is not in
/// `E_j`; `H'` is complete to `V`; `U` is a clique minus its twin edges and
/// `W` holds only its twin edges; `v_i` sees `u_k, u'_k` and `e_j, e'_j` see
/// `w_k, w'_k` for the set bits `k` of `i` and `j`; `U` is complete to
/// `H u H'` and `W` to `V`.
pub fn build_minresolving_instance(h: &Hypergraph) -> Result<ReductionArtifact> {
    let (n, m) = (h.n(), h.m());
    let log_n = log2_exact(n).filter(|_| n > 2).ok_or_else(|| {
        precondition(format!("vertex count {n} is not a power of two greater than 2"))
    })?;
    let log_m = log2_exact(m).filter(|_| m > 2).ok_or_else(|| {
        precondition(format!("edge count {m} is not a power of two greater than 2"))
    })?;
    if let Some(j) = h.first_empty_edge() {
        return Err(precondition(format!("edge {} is empty", j + 1)));
    }
    if !h.is_sperner_up_to_duplicates() {
        return Err(precondition("hypergraph is not Sperner"));
    }
    if let Some(j) = h.edges().iter().position(|e| e.len() == n) {
        return Err(precondition(format!("edge {} holds every vertex", j + 1)));
    }

    let (lu, lw) = (log_n + 1, log_m + 1);
    let mut roles: Vec<Role> = (1..=n).map(Role::V).collect();
    roles.extend((1..=m).map(Role::E));
    roles.extend((1..=m).map(Role::EPrime));
    for k in 1..=lu {
        roles.extend([Role::U(k), Role::UPrime(k)]);
    }
    for k in 1..=lw {
        roles.extend([Role::W(k), Role::WPrime(k)]);
    }
    let v = |i: usize| i - 1;
    let e = |j: usize| n + j - 1;
    let e2 = |j: usize| n + m + j - 1;
    let u = |k: usize| n + 2 * m + 2 * (k - 1);
    let w = |k: usize| n + 2 * m + 2 * lu + 2 * (k - 1);

    let mut g = Graph::new(roles.len());
    g.make_clique(&(1..=n).map(v).collect::<Vec<_>>());
    g.make_clique(&(1..=m).map(e).collect::<Vec<_>>());
    g.make_clique(&(1..=m).map(e2).collect::<Vec<_>>());
    for i in 1..=n {
        for j in 1..=m {
            if !h.edge(j - 1).contains(i - 1) {
                g.connect(v(i), e(j));
            }
            g.connect(v(i), e2(j));
        }
    }
    let u_all: Vec<usize> = (1..=lu).flat_map(|k| [u(k), u(k) + 1]).collect();
    g.make_clique(&u_all);
    for k in 1..=lu {
        g.disconnect(u(k), u(k) + 1);
    }
    for k in 1..=lw {
        g.connect(w(k), w(k) + 1);
    }
    for i in 1..=n {
        for k in bit_indices(i) {
            g.connect(v(i), u(k));
            g.connect(v(i), u(k) + 1);
        }
    }
    for j in 1..=m {
        for k in bit_indices(j) {
            for x in [e(j), e2(j)] {
                g.connect(x, w(k));
                g.connect(x, w(k) + 1);
            }
        }
    }
    for &x in &u_all {
        for j in 1..=m {
            g.connect(x, e(j));
            g.connect(x, e2(j));
        }
    }
    for k in 1..=lw {
        for i in 1..=n {
            g.connect(w(k), v(i));
            g.connect(w(k) + 1, v(i));
        }
    }
    Ok(ReductionArtifact::new(g, roles, h.clone(), ReductionKind::Resolving))
}

impl ReductionArtifact {
    /// The twin pairs `{u_k, u'_k}` and `{w_k, w'_k}` of a resolving gadget.
    pub fn twin_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (v, role) in self.roles.iter().enumerate() {
            let twin = match *role {
                Role::U(k) => Role::UPrime(k),
                Role::W(k) => Role::WPrime(k),
                _ => continue,
            };
            if let Some(t) = self.vertex(twin) {
                pairs.push((v, t));
            }
        }
        pairs
    }

    /// Every set picking exactly one vertex from each twin pair.
    pub fn twin_selections(&self) -> Vec<VertexSet> {
        self.twin_pairs()
            .into_iter()
            .map(|(a, b)| [a, b])
            .multi_cartesian_product()
            .map(|choice| choice.into_iter().collect())
            .collect()
    }

    /// The pairs `{e_j, e'_j}`.
    pub fn edge_copy_pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.source.m())
            .filter_map(|j| Some((self.vertex(Role::E(j))?, self.vertex(Role::EPrime(j))?)))
            .collect()
    }
}

/// Splits a minimal resolving set of the resolving gadget into its twin
/// selection and either a single edge vertex or a minimal transversal.
pub fn decode_minresolving_solution(r: &ReductionArtifact, s: &VertexSet) -> Result<DecodedSolution> {
    if r.kind != ReductionKind::Resolving {
        return Err(Error::DecodeFailure(format!("expected a resolving gadget, got {}", r.kind)));
    }
    let mut z = VertexSet::new();
    for (a, b) in r.twin_pairs() {
        match (s.contains(a), s.contains(b)) {
            (true, false) => z.insert(a),
            (false, true) => z.insert(b),
            _ => {
                return Err(Error::DecodeFailure(format!(
                    "twin pair {} {} not split",
                    r.role(a),
                    r.role(b)
                )))
            }
        };
    }
    let edge_side = r.vertices_where(|role| matches!(role, Role::E(_) | Role::EPrime(_)));
    let hit = s.intersection(&edge_side);
    let t = r.project(s);
    match hit.len() {
        0 => Ok(DecodedSolution::TransversalResolving { z, t }),
        1 if t.is_empty() => Ok(DecodedSolution::GarbageResolving {
            z,
            e: hit.first().unwrap(),
        }),
        _ => Err(Error::DecodeFailure(
            "edge vertices mixed with other choices".into(),
        )),
    }
}

/// Recovers each minimal transversal of the source once from a stream of
/// the gadget's minimal resolving sets. Every transversal arrives once per
/// twin selection; later copies are dropped through a hash set.
pub fn transenum_via_minresolving(
    r: &ReductionArtifact,
    resolver: BoxedStream,
) -> Result<TransversalRecovery> {
    if r.kind != ReductionKind::Resolving {
        return Err(precondition(format!("expected a resolving gadget, got {}", r.kind)));
    }
    let artifact = r.clone();
    Ok(TransversalRecovery::new(
        resolver,
        Box::new(move |s| decode_minresolving_solution(&artifact, s)),
        true,
    ))
}
