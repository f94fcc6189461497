//! Resolving, geodetic and strong resolving sets.

mod geodetic;
mod pairs;
mod resolving;
mod strong;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use geodetic::{
    classify_geodetic, enumerate_minimal_geodetic_sets, geodetic_failure,
    split_geodetic_hypergraph, GeodeticOptions, GeodeticStream, SplitGeodetic,
    DEFAULT_GENERAL_LIMIT,
};
pub use pairs::{is_consistent, pair_cover_hypergraph, PairHypergraph};
pub use resolving::{
    classify_resolving, distinguishing_hypergraph, enumerate_minimal_resolving_sets,
    resolving_failure,
};
pub use strong::{
    classify_strong_resolving, enumerate_minimal_strong_resolving_sets, mmd_graph,
    strong_resolving_failure,
};

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}
