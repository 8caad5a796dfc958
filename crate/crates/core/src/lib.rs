//! List edge colouring with Vizing fans and colour interchange paths, exact
//! small-graph oracles, and Hall condition indices.

pub mod cip;
pub mod colouring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hall;
pub mod lists;
pub mod oracle;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Vertex};
pub use lists::{Color, ColorSet, ListAssignment, TotalListAssignment};
