//! Command-line front end for the `lec` library.

pub mod commands;
pub mod fuzz;
pub mod seeds;

pub use commands::{run, Cli, Failure, Outcome, EXIT_FAILURE, EXIT_INPUT};
