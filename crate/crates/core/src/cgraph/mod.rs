//! Complete edge-coloured graphs and digraphs, orbital graphs and Cayley
//! colour graphs.

mod cayley;
mod graph;
pub mod io;
mod orbital;

pub use cayley::{cayley_star, ColourPartition};
pub use graph::ColouredGraph;
pub use orbital::{orb_digraph, orb_graph};
