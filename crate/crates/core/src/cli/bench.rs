use std::io::Write;

use rand::rngs::StdRng;
use rand::SeedableRng;

use super::report::run_stream;
use crate::engine::{enumerate_minimal_transversals, BoxedStream, EngineChoice};
use crate::generators;
use crate::metric::{
    enumerate_minimal_geodetic_sets, enumerate_minimal_resolving_sets,
    enumerate_minimal_strong_resolving_sets, GeodeticOptions,
};

/// One line per (family, n): solutions, total ticks, largest gap, wall time.
pub(super) fn run(max_n: usize, seed: u64, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{:<22} {:>3} {:>9} {:>12} {:>10} {:>10}", "family", "n", "solutions", "ticks", "max_gap", "ms")?;
    let mut rng = StdRng::seed_from_u64(seed);
    for n in (4..=max_n).step_by(2) {
        let g = generators::random_connected_graph(n, 0.3, &mut rng);
        let h = generators::random_hypergraph(n, n, 0.3, &mut rng);
        let runs: Vec<(&str, BoxedStream)> = vec![
            ("transversals/berge", enumerate_minimal_transversals(&h, EngineChoice::Berge).expect("no empty edges")),
            ("transversals/dfs", enumerate_minimal_transversals(&h, EngineChoice::DfsHittingSet).expect("no empty edges")),
            ("resolving/cycle", enumerate_minimal_resolving_sets(&generators::cycle(n), EngineChoice::default())),
            ("resolving/random", enumerate_minimal_resolving_sets(&g, EngineChoice::default())),
            ("strong-resolving/random", enumerate_minimal_strong_resolving_sets(&g).expect("connected")),
            ("geodetic/random", enumerate_minimal_geodetic_sets(&g, &GeodeticOptions::default()).expect("connected")),
        ];
        for (name, mut stream) in runs {
            let r = run_stream(&mut *stream, name, &[], |_| Ok(()))?;
            writeln!(
                out,
                "{:<22} {:>3} {:>9} {:>12} {:>10} {:>10.2}",
                name, n, r.solutions, r.total_ticks, r.max_gap_ticks, r.wall_time_ms
            )?;
        }
    }
    Ok(())
}
