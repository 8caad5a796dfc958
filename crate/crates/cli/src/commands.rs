//! Subcommand definitions and their implementations.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde::Serialize;
use serde_json::json;

use lec::colouring::{check_edge_colouring, check_total_colouring, TotalColoring};
use lec::generate::{generate, GraphKind};
use lec::hall::{
    check_hall_edge_condition_guarded, check_hall_total_condition_guarded, hall_condition_index_guarded,
    hall_condition_index_via_lists_guarded, total_hall_condition_number_guarded,
    total_hall_condition_number_via_lists_guarded, HallGuards,
};
use lec::lists::{random_lists, random_total_lists, uniform_lists, ListsFile};
use lec::oracle::{
    chromatic_index_guarded, improper2_chromatic_index_guarded, matching_number, total_independence_number_guarded,
    OracleBudget, DEFAULT_EDGE_GUARD, DEFAULT_TOTAL_GUARD,
};
use lec::solver::{colour_edges_with, total_colour_lists_with, ColouringFile, SolveOptions};
use lec::{ColorSet, Error, Graph, ListAssignment, TotalListAssignment};

use crate::fuzz::{run_fuzz, FuzzConfig};
use crate::seeds::{substream, GRAPH_GEN, LIST_GEN};

/// Exit code for malformed input or unreadable files.
pub const EXIT_INPUT: i32 = 1;
/// Exit code for a mathematical failure or a detected violation.
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lec", version, about = "List edge colouring and total colouring tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// List edge colour a graph.
    ColourEdges(ColourArgs),
    /// Total colour a graph from vertex and edge lists.
    ColourTotal(ColourArgs),
    /// Check a colouring against a graph and lists.
    Verify(VerifyArgs),
    /// Exact chromatic and independence parameters of a small graph.
    Exact(ExactArgs),
    /// Hall condition numbers, or a Hall condition check for given lists.
    Hall(HallArgs),
    /// Run the solver on random instances and check every result.
    Fuzz(FuzzArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Petersen,
    Random,
}

/// Where lists come from. At most one of `--lists`, `--uniform`, `--random`.
#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").args(["lists", "uniform", "random"])))]
pub struct ListSource {
    /// JSON lists file.
    #[arg(long, value_name = "FILE")]
    pub lists: Option<PathBuf>,
    /// Every list is {0, .., K-1}.
    #[arg(long, value_name = "K")]
    pub uniform: Option<usize>,
    /// Random K-subsets of {0, .., palette-1}.
    #[arg(long, value_name = "K")]
    pub random: Option<usize>,
    /// Palette size for --random (default 2K).
    #[arg(long, value_name = "P")]
    pub palette: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl ListSource {
    fn given(&self) -> bool {
        self.lists.is_some() || self.uniform.is_some() || self.random.is_some()
    }

    fn list_seed(&self) -> u64 {
        substream(self.seed, LIST_GEN, 0).gen()
    }

    fn palette_for(&self, k: usize) -> usize {
        self.palette.unwrap_or(2 * k)
    }

    /// Edge lists; `default_k` is used when no source was given.
    fn edge_lists(&self, g: &Graph, default_k: usize) -> Result<ListAssignment, Failure> {
        if let Some(path) = &self.lists {
            let file: ListsFile = read_json(path)?;
            return file.edge_assignment(g).map_err(|e| input(anyhow!("{}: {e}", path.display())));
        }
        if let Some(k) = self.random {
            return random_lists(g, k, self.palette_for(k), self.list_seed()).map_err(Failure::from);
        }
        Ok(uniform_lists(g, self.uniform.unwrap_or(default_k)))
    }

    fn total_lists(&self, g: &Graph, default_k: usize) -> Result<TotalListAssignment, Failure> {
        if let Some(path) = &self.lists {
            let file: ListsFile = read_json(path)?;
            return file.total_assignment(g).map_err(|e| input(anyhow!("{}: {e}", path.display())));
        }
        if let Some(k) = self.random {
            return random_total_lists(g, k, self.palette_for(k), self.list_seed()).map_err(Failure::from);
        }
        Ok(TotalListAssignment::uniform(g, self.uniform.unwrap_or(default_k)))
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: Family,
    /// Family parameters: path/cycle/complete take n, complete-bipartite a b,
    /// random n p.
    pub params: Vec<String>,
    #[arg(short, long, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Also write lists for the generated graph.
    #[arg(long, value_name = "FILE", requires = "source")]
    pub lists_out: Option<PathBuf>,
    /// Write total lists (with vertex lists) to --lists-out.
    #[arg(long)]
    pub total: bool,
    #[command(flatten)]
    pub source: ListSource,
}

#[derive(Debug, Args)]
pub struct ColourArgs {
    pub graph: PathBuf,
    #[command(flatten)]
    pub source: ListSource,
    /// Run even when lists are below the guaranteed size.
    #[arg(long)]
    pub force: bool,
    /// Write the CIP search trace here.
    #[arg(long, value_name = "FILE")]
    pub trace: Option<PathBuf>,
    /// Write every interchanged CIP as DOT here.
    #[arg(long, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Write a reproduction bundle here if the solver fails.
    #[arg(long, value_name = "FILE")]
    pub repro: Option<PathBuf>,
    #[arg(short, long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub colouring: PathBuf,
    #[command(flatten)]
    pub source: ListSource,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    pub graph: PathBuf,
    /// Search node budget per decision.
    #[arg(long, default_value_t = 100_000_000)]
    pub budget: u64,
    #[arg(long, default_value_t = DEFAULT_EDGE_GUARD)]
    pub edge_guard: usize,
    /// Limit on |V| + |E| for the total independence number.
    #[arg(long, default_value_t = DEFAULT_TOTAL_GUARD)]
    pub total_guard: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").args(["edge", "total", "check"])))]
pub struct HallArgs {
    pub graph: PathBuf,
    /// Edge Hall condition number (the default).
    #[arg(long)]
    pub edge: bool,
    /// Total Hall condition number.
    #[arg(long)]
    pub total: bool,
    /// Check the Hall condition for these lists (total if they have vertex lists).
    #[arg(long, value_name = "LISTS")]
    pub check: Option<PathBuf>,
    /// Compute the number by enumerating lists instead of the ratio formula.
    #[arg(long, conflicts_with = "check")]
    pub via_lists: bool,
    /// Size limit (vertices, or items for total checks).
    #[arg(long)]
    pub guard: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 20)]
    pub n_max: usize,
    /// Lists have size Δ + offset.
    #[arg(long, default_value_t = 2)]
    pub offset: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fraction of trials cross-checked by the exact oracle.
    #[arg(long, default_value_t = 0.1)]
    pub oracle_rate: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub oracle_budget: u64,
    /// Directory for reproduction bundles of failed trials.
    #[arg(long, value_name = "DIR")]
    pub repro_dir: Option<PathBuf>,
    #[arg(long, hide = true)]
    pub mutate: bool,
}

/// Error with the exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Math(anyhow::Error),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Math(_) => EXIT_FAILURE,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Input(e) | Failure::Math(e) => format!("{e:#}"),
        }
    }
}

fn input(e: anyhow::Error) -> Failure {
    Failure::Input(e)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGraph(_)
            | Error::Parse { .. }
            | Error::InvalidInput(_)
            | Error::ListTooSmall { .. }
            | Error::GuardExceeded { .. } => Failure::Input(e.into()),
            _ => Failure::Math(e.into()),
        }
    }
}

/// What a successful command prints, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(input)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    Graph::from_edge_list(&text).map_err(|e| input(anyhow!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .with_context(|| format!("{}: malformed JSON", path.display()))
        .map_err(input)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(input)
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

/// Writes to `output` when given (printing nothing), otherwise returns text.
fn emit(output: Option<&Path>, text: String) -> Result<Outcome, Failure> {
    match output {
        Some(p) => {
            write_file(p, &text)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

pub fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::ColourEdges(a) => colour_edges(a),
        Command::ColourTotal(a) => colour_total(a),
        Command::Verify(a) => verify(a),
        Command::Exact(a) => exact(a),
        Command::Hall(a) => hall(a),
        Command::Fuzz(a) => fuzz(a),
    }
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, name: &str) -> Result<T, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| input(anyhow!("missing parameter {name}")))?;
    raw.parse()
        .map_err(|_| input(anyhow!("parameter {name}: cannot parse {raw:?}")))
}

fn family_kind(family: Family, params: &[String], seed: u64) -> Result<GraphKind, Failure> {
    let expected = match family {
        Family::Petersen => 0,
        Family::Path | Family::Cycle | Family::Complete => 1,
        Family::CompleteBipartite | Family::Random => 2,
    };
    if params.len() != expected {
        return Err(input(anyhow!(
            "{family:?} takes {expected} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(match family {
        Family::Path => GraphKind::Path(param(params, 0, "n")?),
        Family::Cycle => GraphKind::Cycle(param(params, 0, "n")?),
        Family::Complete => GraphKind::Complete(param(params, 0, "n")?),
        Family::CompleteBipartite => GraphKind::CompleteBipartite(param(params, 0, "a")?, param(params, 1, "b")?),
        Family::Petersen => GraphKind::Petersen,
        Family::Random => GraphKind::Random {
            n: param(params, 0, "n")?,
            p: param(params, 1, "p")?,
            seed: substream(seed, GRAPH_GEN, 0).gen(),
        },
    })
}

fn gen(a: GenArgs) -> Result<Outcome, Failure> {
    let g = generate(family_kind(a.family, &a.params, a.source.seed)?)?;
    if let Some(path) = &a.lists_out {
        let file = if a.total {
            ListsFile::from_total(&a.source.total_lists(&g, g.max_degree() + 4)?)
        } else {
            ListsFile::from_edge_lists(&a.source.edge_lists(&g, g.max_degree() + 2)?)
        };
        write_file(path, &pretty(&file))?;
    }
    emit(a.output.as_deref(), g.to_edge_list())
}

fn solve_options(a: &ColourArgs) -> SolveOptions {
    SolveOptions {
        force: a.force,
        trace: a.trace.is_some() || a.dot.is_some(),
        ..Default::default()
    }
}

fn dot_bundle(cips: &[lec::cip::Cip]) -> String {
    let mut out = String::new();
    for (i, cip) in cips.iter().enumerate() {
        let _ = writeln!(out, "// interchange {}", i + 1);
        out.push_str(&cip.to_dot());
    }
    out
}

/// Turns a solver error into a failure, saving the bundle when asked.
fn solver_failure(e: Error, repro: Option<&Path>) -> Failure {
    if let (Error::SolveFailure(bundle), Some(path)) = (&e, repro) {
        if let Err(w) = write_file(path, &bundle.to_json()) {
            return w;
        }
    }
    Failure::from(e)
}

fn write_diagnostics(a: &ColourArgs, report: &lec::solver::SolveReport) -> Result<(), Failure> {
    if let Some(p) = &a.trace {
        write_file(p, &report.cip_trace)?;
    }
    if let Some(p) = &a.dot {
        write_file(p, &dot_bundle(&report.applied))?;
    }
    Ok(())
}

fn colour_edges(a: ColourArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    let lists = a.source.edge_lists(&g, g.max_degree() + 2)?;
    let report = colour_edges_with(&g, &lists, &solve_options(&a)).map_err(|e| solver_failure(e, a.repro.as_deref()))?;
    write_diagnostics(&a, &report)?;
    let file = ColouringFile {
        edge_colours: report.colouring.clone(),
        vertex_colours: None,
        stats: serde_json::to_value(report.summary()).expect("serialisable"),
    };
    emit(a.output.as_deref(), pretty(&file))
}

fn colour_total(a: ColourArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    let lists = a.source.total_lists(&g, g.max_degree() + 4)?;
    let (tc, report) =
        total_colour_lists_with(&g, &lists, &solve_options(&a)).map_err(|e| solver_failure(e, a.repro.as_deref()))?;
    write_diagnostics(&a, &report)?;
    let mut stats = serde_json::to_value(report.summary()).expect("serialisable");
    stats["distinct_colours"] = json!(tc.distinct_colours());
    let file = ColouringFile {
        edge_colours: tc.edge_colours,
        vertex_colours: Some(tc.vertex_colours),
        stats,
    };
    emit(a.output.as_deref(), pretty(&file))
}

fn verify(a: VerifyArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    let file: ColouringFile = read_json(&a.colouring)?;
    if file.edge_colours.len() != g.edge_count() {
        return Err(input(anyhow!(
            "{}: {} edge colours for {} edges",
            a.colouring.display(),
            file.edge_colours.len(),
            g.edge_count()
        )));
    }
    let result = match &file.vertex_colours {
        Some(vc) => {
            let lists = if a.source.given() {
                a.source.total_lists(&g, 0)?
            } else {
                own_total_lists(&g, &file.edge_colours, vc)?
            };
            let tc = TotalColoring {
                vertex_colours: vc.clone(),
                edge_colours: file.edge_colours.clone(),
            };
            check_total_colouring(&g, &lists, &tc)
        }
        None => {
            let lists = if a.source.given() {
                a.source.edge_lists(&g, 0)?
            } else {
                own_edge_lists(&g, &file.edge_colours)?
            };
            let colours: Vec<_> = file.edge_colours.iter().copied().map(Some).collect();
            check_edge_colouring(&g, &lists, &colours)
        }
    };
    Ok(match result {
        Ok(()) => Outcome::ok(pretty(&json!({ "valid": true }))),
        Err(v) => Outcome {
            stdout: pretty(&json!({ "valid": false, "violation": v.to_string() })),
            code: EXIT_FAILURE,
        },
    })
}

/// Lists holding exactly the given colours, so only properness is checked.
fn own_edge_lists(g: &Graph, colours: &[lec::Color]) -> Result<ListAssignment, Failure> {
    Ok(ListAssignment::new(g, colours.iter().map(|&c| ColorSet::new(vec![c])).collect())?)
}

fn own_total_lists(g: &Graph, edges: &[lec::Color], vertices: &[lec::Color]) -> Result<TotalListAssignment, Failure> {
    if vertices.len() != g.vertex_count() {
        return Err(input(anyhow!(
            "{} vertex colours for {} vertices",
            vertices.len(),
            g.vertex_count()
        )));
    }
    let single = |cs: &[lec::Color]| cs.iter().map(|&c| ColorSet::new(vec![c])).collect();
    Ok(TotalListAssignment::new(g, single(edges), single(vertices))?)
}

/// A value, or null when a guard or budget stopped the computation.
fn bounded(r: lec::Result<usize>) -> Result<Option<usize>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::GuardExceeded { .. } | Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Serialize)]
struct ExactReport {
    chi_prime: Option<usize>,
    chi_prime_2: Option<usize>,
    alpha_prime: usize,
    #[serde(rename = "alpha_T")]
    alpha_t: Option<usize>,
}

fn exact(a: ExactArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    let budget = OracleBudget { node_limit: a.budget };
    let report = ExactReport {
        chi_prime: bounded(chromatic_index_guarded(&g, budget, a.edge_guard))?,
        chi_prime_2: bounded(improper2_chromatic_index_guarded(&g, budget, a.edge_guard))?,
        alpha_prime: matching_number(&g),
        alpha_t: bounded(total_independence_number_guarded(&g, a.total_guard))?,
    };
    Ok(Outcome::ok(pretty(&report)))
}

fn hall(a: HallArgs) -> Result<Outcome, Failure> {
    let g = read_graph(&a.graph)?;
    let guards = HallGuards::default();
    if let Some(path) = &a.check {
        let file: ListsFile = read_json(path)?;
        let check = if file.vertex_lists.is_some() {
            let lists = file.total_assignment(&g).map_err(|e| input(anyhow!("{}: {e}", path.display())))?;
            check_hall_total_condition_guarded(&g, &lists, a.guard.unwrap_or(guards.total_check))?
        } else {
            let lists = file.edge_assignment(&g).map_err(|e| input(anyhow!("{}: {e}", path.display())))?;
            check_hall_edge_condition_guarded(&g, &lists, a.guard.unwrap_or(guards.edge_check))?
        };
        let code = if check.is_satisfied() { 0 } else { EXIT_FAILURE };
        return Ok(Outcome {
            stdout: pretty(&check),
            code,
        });
    }
    let text = match (a.total, a.via_lists) {
        (false, false) => pretty(&hall_condition_index_guarded(
            &g,
            a.guard.unwrap_or(guards.edge_index),
            false,
        )?),
        (false, true) => {
            let v = hall_condition_index_via_lists_guarded(&g, a.guard.unwrap_or(guards.edge_index_lists))?;
            pretty(&json!({ "value": v }))
        }
        (true, false) => pretty(&total_hall_condition_number_guarded(
            &g,
            a.guard.unwrap_or(guards.total_index),
        )?),
        (true, true) => {
            let v = total_hall_condition_number_via_lists_guarded(&g, a.guard.unwrap_or(guards.total_index_lists))?;
            pretty(&json!({ "value": v }))
        }
    };
    Ok(Outcome::ok(text))
}

fn fuzz(a: FuzzArgs) -> Result<Outcome, Failure> {
    if a.n_max < 2 {
        return Err(input(anyhow!("--n-max must be at least 2")));
    }
    if !(0.0..=1.0).contains(&a.oracle_rate) {
        return Err(input(anyhow!("--oracle-rate must lie in [0, 1]")));
    }
    let cfg = FuzzConfig {
        trials: a.trials,
        n_max: a.n_max,
        offset: a.offset,
        seed: a.seed,
        oracle_rate: a.oracle_rate,
        oracle_budget: a.oracle_budget,
        mutate: a.mutate,
    };
    let (summary, bundles) = run_fuzz(&cfg);
    if let Some(dir) = &a.repro_dir {
        fs::create_dir_all(dir)
            .with_context(|| format!("cannot create {}", dir.display()))
            .map_err(input)?;
        for (i, b) in &bundles {
            write_file(&dir.join(format!("trial-{i}.json")), &b.to_json())?;
        }
    }
    let code = if summary.is_bad() { EXIT_FAILURE } else { 0 };
    Ok(Outcome {
        stdout: pretty(&summary),
        code,
    })
}
