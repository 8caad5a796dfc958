//! Random solver campaigns with independent checking.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use lec::colouring::check_edge_colouring;
use lec::generate::random_graph;
use lec::lists::random_lists;
use lec::oracle::{list_edge_colourable, Decision, OracleBudget, DEFAULT_EDGE_GUARD};
use lec::solver::{colour_edges_with, SolveFailure, SolveOptions};
use lec::{Color, Error, Graph, ListAssignment};

use crate::seeds::{substream, FUZZ_ORDER, GRAPH_GEN, LIST_GEN};

pub const EDGE_PROBABILITIES: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub trials: u64,
    pub n_max: usize,
    /// Lists have size `Δ + offset`.
    pub offset: usize,
    pub seed: u64,
    /// Fraction of trials cross-checked against the exact oracle.
    pub oracle_rate: f64,
    pub oracle_budget: u64,
    /// Corrupt every solver output before checking (harness self-test).
    pub mutate: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 100,
            n_max: 20,
            offset: 2,
            seed: 0,
            oracle_rate: 0.1,
            oracle_budget: 1_000_000,
            mutate: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub trials: u64,
    pub offset: usize,
    pub successes: u64,
    pub failures: u64,
    pub checker_failures: u64,
    pub oracle_checked: u64,
    pub oracle_disagreements: u64,
    /// Solver failed although the oracle found a colouring.
    pub solver_missed: u64,
    pub interchanges: u64,
    pub max_fan_len: usize,
    pub max_cip_len: usize,
    pub failed_trials: Vec<u64>,
}

impl FuzzSummary {
    /// Whether the campaign should be reported as a failure.
    pub fn is_bad(&self) -> bool {
        (self.offset >= 2 && self.failures > 0) || self.checker_failures > 0 || self.oracle_disagreements > 0
    }
}

/// One generated instance.
pub struct Trial {
    pub index: u64,
    pub graph: Graph,
    pub lists: ListAssignment,
    pub oracle: bool,
}

pub fn make_trial(cfg: &FuzzConfig, index: u64) -> Trial {
    let mut rng = substream(cfg.seed, GRAPH_GEN, index);
    let n = rng.gen_range(2..=cfg.n_max.max(2));
    let p = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
    let graph = random_graph(n, p, rng.gen());

    let mut rng = substream(cfg.seed, LIST_GEN, index);
    let k = (graph.max_degree() + cfg.offset).max(1);
    let palette = rng.gen_range(k..=2 * k + 1);
    let lists = random_lists(&graph, k, palette, rng.gen()).expect("palette covers list size");

    let oracle = substream(cfg.seed, FUZZ_ORDER, index).gen_bool(cfg.oracle_rate.clamp(0.0, 1.0));
    Trial {
        index,
        graph,
        lists,
        oracle,
    }
}

#[derive(Debug, Default)]
struct TrialResult {
    success: bool,
    checker_failed: bool,
    oracle_checked: bool,
    disagreement: bool,
    missed: bool,
    interchanges: u64,
    max_fan_len: usize,
    max_cip_len: usize,
    failure: Option<SolveFailure>,
}

/// Breaks a valid colouring: copies a neighbouring edge's colour, or leaves
/// the list when the edge has no neighbour.
fn corrupt(g: &Graph, lists: &ListAssignment, colours: &mut [Color]) {
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if let Some(&f) = g.incident(u).iter().chain(g.incident(v)).find(|&&f| f != e) {
            colours[e] = colours[f];
            return;
        }
    }
    if let Some(c) = colours.first_mut() {
        *c = lists.list(0).iter().max().unwrap_or(0) + 1;
    }
}

fn run_trial(cfg: &FuzzConfig, t: &Trial) -> TrialResult {
    let opts = SolveOptions {
        force: true,
        ..Default::default()
    };
    let mut r = TrialResult::default();
    let solved = colour_edges_with(&t.graph, &t.lists, &opts);
    match &solved {
        Ok(report) => {
            r.success = true;
            let s = report.summary();
            r.interchanges = s.interchanges as u64;
            r.max_fan_len = s.max_fan_len;
            r.max_cip_len = s.max_cip_len;
            let mut colours = report.colouring.clone();
            if cfg.mutate {
                corrupt(&t.graph, &t.lists, &mut colours);
            }
            let opt: Vec<Option<Color>> = colours.into_iter().map(Some).collect();
            r.checker_failed = check_edge_colouring(&t.graph, &t.lists, &opt).is_err();
        }
        Err(Error::SolveFailure(f)) => r.failure = Some((**f).clone()),
        Err(_) => r.checker_failed = true,
    }
    if t.oracle && t.graph.edge_count() <= DEFAULT_EDGE_GUARD {
        let budget = OracleBudget {
            node_limit: cfg.oracle_budget,
        };
        match list_edge_colourable(&t.graph, &t.lists, budget) {
            Ok(Decision::Yes(w)) => {
                r.oracle_checked = true;
                let w: Vec<Option<Color>> = w.into_iter().map(Some).collect();
                if check_edge_colouring(&t.graph, &t.lists, &w).is_err() {
                    r.disagreement = true;
                }
                r.missed = !r.success;
            }
            Ok(Decision::No) => {
                r.oracle_checked = true;
                r.disagreement = r.success;
            }
            Ok(Decision::BudgetExceeded) | Err(_) => {}
        }
    }
    r
}

/// Runs every trial (in parallel) and aggregates in trial order. Failure
/// bundles are returned alongside the summary.
pub fn run_fuzz(cfg: &FuzzConfig) -> (FuzzSummary, Vec<(u64, SolveFailure)>) {
    let results: Vec<(u64, TrialResult)> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let t = make_trial(cfg, i);
            (i, run_trial(cfg, &t))
        })
        .collect();
    let mut s = FuzzSummary {
        trials: cfg.trials,
        offset: cfg.offset,
        ..Default::default()
    };
    let mut bundles = Vec::new();
    for (i, r) in results {
        if r.success {
            s.successes += 1;
        } else {
            s.failures += 1;
            s.failed_trials.push(i);
        }
        s.checker_failures += r.checker_failed as u64;
        s.oracle_checked += r.oracle_checked as u64;
        s.oracle_disagreements += r.disagreement as u64;
        s.solver_missed += r.missed as u64;
        s.interchanges += r.interchanges;
        s.max_fan_len = s.max_fan_len.max(r.max_fan_len);
        s.max_cip_len = s.max_cip_len.max(r.max_cip_len);
        if let Some(f) = r.failure {
            bundles.push((i, f));
        }
    }
    (s, bundles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trials_follow_the_configuration() {
        let cfg = FuzzConfig {
            n_max: 12,
            offset: 3,
            seed: 9,
            ..Default::default()
        };
        for i in 0..20 {
            let t = make_trial(&cfg, i);
            assert!(t.graph.vertex_count() >= 2 && t.graph.vertex_count() <= 12);
            let k = (t.graph.max_degree() + 3).max(1);
            assert!(t.lists.lists().iter().all(|l| l.len() == k));
        }
    }

    #[test]
    fn small_campaign_is_clean_and_mutation_is_caught() {
        let cfg = FuzzConfig {
            trials: 30,
            n_max: 10,
            oracle_rate: 1.0,
            ..Default::default()
        };
        let (s, bundles) = run_fuzz(&cfg);
        assert_eq!((s.failures, s.checker_failures, s.oracle_disagreements), (0, 0, 0));
        assert!(bundles.is_empty());
        assert!(!s.is_bad());

        let (m, _) = run_fuzz(&FuzzConfig { mutate: true, ..cfg });
        assert!(m.checker_failures > 0);
        assert!(m.is_bad());
    }
}
