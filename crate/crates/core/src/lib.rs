//! Set Cover parameterized by solution size on `d`-flat hypergraphs.

pub mod cli;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod par;
pub mod reductions;
pub mod rng;
pub mod solver;
pub mod structure;
pub mod trace;

pub use error::{Error, Result};
pub use hypergraph::{Cover, Hypergraph, VertexSet};
