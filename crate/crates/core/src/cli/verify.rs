use std::io::Write;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::engine::{enumerate_minimal_transversals, EngineChoice};
use crate::generators;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::metric::{
    enumerate_minimal_geodetic_sets, enumerate_minimal_resolving_sets,
    enumerate_minimal_strong_resolving_sets, GeodeticOptions,
};
use crate::oracle::{
    brute_minimal_solutions, GeodeticPredicate, ResolvingPredicate, StrongResolvingPredicate,
    TransversalPredicate,
};
use crate::reductions::{
    build_ext_geodetic_instance, build_ext_resolving_instance, build_mingeodetic_instance,
    ext_check, transenum_via_mingeodetic, ExtTarget, DEFAULT_EXT_LIMIT,
};
use crate::vertex_set::VertexSet;

type Check = std::result::Result<(), String>;

fn sorted(v: impl Iterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut v: Vec<_> = v.collect();
    v.sort();
    v
}

fn same(got: Vec<VertexSet>, want: Vec<VertexSet>) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{} solutions, expected {}", got.len(), want.len()))
    }
}

fn check_transversals(h: &Hypergraph) -> Check {
    let want = brute_minimal_solutions(&TransversalPredicate::new(h), 20).map_err(|e| e.to_string())?;
    for algo in [EngineChoice::Berge, EngineChoice::DfsHittingSet] {
        let got = sorted(enumerate_minimal_transversals(h, algo).map_err(|e| e.to_string())?);
        same(got, want.clone()).map_err(|e| format!("{algo}: {e}"))?;
    }
    Ok(())
}

fn check_resolving(g: &Graph) -> Check {
    let want = brute_minimal_solutions(&ResolvingPredicate::new(g), 20).map_err(|e| e.to_string())?;
    same(sorted(enumerate_minimal_resolving_sets(g, EngineChoice::default())), want)
}

fn check_geodetic(g: &Graph) -> Check {
    let want = brute_minimal_solutions(&GeodeticPredicate::new(g), 20).map_err(|e| e.to_string())?;
    let got = enumerate_minimal_geodetic_sets(g, &GeodeticOptions::default()).map_err(|e| e.to_string())?;
    same(sorted(got), want)
}

fn check_strong(g: &Graph) -> Check {
    let want = brute_minimal_solutions(&StrongResolvingPredicate::new(g), 20).map_err(|e| e.to_string())?;
    let got = enumerate_minimal_strong_resolving_sets(g).map_err(|e| e.to_string())?;
    same(sorted(got), want)
}

fn check_geodetic_gadget(h: &Hypergraph) -> Check {
    let r = build_mingeodetic_instance(h).map_err(|e| e.to_string())?;
    let stream = enumerate_minimal_geodetic_sets(&r.graph, &GeodeticOptions::default()).map_err(|e| e.to_string())?;
    let mut rec = transenum_via_mingeodetic(&r, stream).map_err(|e| e.to_string())?;
    let got = sorted(rec.by_ref());
    let want = brute_minimal_solutions(&TransversalPredicate::new(h), 20).map_err(|e| e.to_string())?;
    if rec.pulled() != h.m() + want.len() {
        return Err(format!("{} geodetic sets, expected {}", rec.pulled(), h.m() + want.len()));
    }
    same(got, want)
}

fn check_ext(h: &Hypergraph, a: &VertexSet, b: &VertexSet) -> Check {
    let source = ext_check(ExtTarget::Transversals(h), a, b, DEFAULT_EXT_LIMIT).map_err(|e| e.to_string())?;
    if !h.is_minimal_transversal(&VertexSet::full(h.n())) {
        let inst = build_ext_geodetic_instance(h, a, b).map_err(|e| e.to_string())?;
        let gadget = ext_check(ExtTarget::Geodetic(inst.graph()), &inst.required, &inst.forbidden, DEFAULT_EXT_LIMIT)
            .map_err(|e| e.to_string())?;
        if gadget.is_yes() != source.is_yes() {
            return Err("geodetic gadget disagrees".into());
        }
    }
    let (padded, pa, pb) = h.pad_for_ext_resolving_reduction(a, b).map_err(|e| e.to_string())?;
    let inst = build_ext_resolving_instance(&padded, &pa, &pb).map_err(|e| e.to_string())?;
    let gadget = ext_check(ExtTarget::Resolving(inst.graph()), &inst.required, &inst.forbidden, DEFAULT_EXT_LIMIT)
        .map_err(|e| e.to_string())?;
    if gadget.is_yes() != source.is_yes() {
        return Err("resolving gadget disagrees".into());
    }
    Ok(())
}

/// Runs every check, printing `ok <name>` or `FAIL <name>: <reason>`.
/// Returns the number of failures.
pub(super) fn run(seed: u64, rounds: usize, out: &mut dyn Write) -> std::io::Result<usize> {
    let mut failures = 0;
    let mut report = |name: String, result: Check, out: &mut dyn Write| -> std::io::Result<()> {
        match result {
            Ok(()) => writeln!(out, "ok {name}"),
            Err(e) => {
                failures += 1;
                writeln!(out, "FAIL {name}: {e}")
            }
        }
    };
    let named: Vec<(&str, Graph)> = vec![
        ("path5", generators::path(5)),
        ("cycle6", generators::cycle(6)),
        ("k4", generators::complete(4)),
        ("star4", generators::star(4)),
        ("triangle-pendant", generators::triangle_pendant()),
        ("petersen", generators::petersen()),
    ];
    for (name, g) in &named {
        report(format!("resolving {name}"), check_resolving(g), out)?;
        report(format!("geodetic {name}"), check_geodetic(g), out)?;
        report(format!("strong-resolving {name}"), check_strong(g), out)?;
    }
    report("transversals h1".into(), check_transversals(&generators::h1()), out)?;
    report("transversals h2".into(), check_transversals(&generators::h2()), out)?;
    report("geodetic gadget h2".into(), check_geodetic_gadget(&generators::h2()), out)?;

    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..rounds {
        let n = rng.gen_range(2..=8);
        let g = generators::random_connected_graph(n, 0.3, &mut rng);
        report(format!("resolving random#{i}"), check_resolving(&g), out)?;
        report(format!("geodetic random#{i}"), check_geodetic(&g), out)?;
        report(format!("strong-resolving random#{i}"), check_strong(&g), out)?;
        let h = generators::random_hypergraph(rng.gen_range(1..=7), rng.gen_range(1..=6), 0.4, &mut rng);
        report(format!("transversals random#{i}"), check_transversals(&h), out)?;
        let h = generators::random_hypergraph(rng.gen_range(1..=5), rng.gen_range(1..=4), 0.4, &mut rng);
        let (a, b) = generators::random_partial_assignment(h.n(), &mut rng);
        report(format!("ext random#{i}"), check_ext(&h, &a, &b), out)?;
    }
    writeln!(out, "{} failed", failures)?;
    Ok(failures)
}
