use thiserror::Error;

use crate::graph::{EdgeId, Vertex};
use crate::solver::SolveFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("edge {edge} has a list of size {size}, at least {required} required")]
    ListTooSmall {
        edge: EdgeId,
        size: usize,
        required: usize,
    },

    #[error("greedy vertex colouring is stuck at vertex {vertex}")]
    GreedyStuck { vertex: Vertex },

    #[error("no colour interchange path exists ({explored} search nodes explored, exhaustive: {exhaustive})")]
    NoCipFound { explored: u64, exhaustive: bool },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("solver failed on edge {}: {}", .0.edge, .0.reason)]
    SolveFailure(Box<SolveFailure>),

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
}
