//! Enumeration of minimal resolving, geodetic and strong resolving sets of
//! graphs, minimal transversals of hypergraphs, and the gadget constructions
//! relating them.

pub mod class;
pub mod cli;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod io;

pub mod metric;
pub mod oracle;
pub mod reductions;

pub mod vertex_set;

pub use class::SolutionClass;
pub use engine::{EngineChoice, SolutionStream};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use hypergraph::Hypergraph;
pub use vertex_set::{vset, VertexSet};
