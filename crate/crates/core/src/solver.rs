//! Edge-by-edge list colouring with Vizing fans and colour interchange paths,
//! plus the total colouring layers built on top of it.
//!
//! Each uncoloured edge `f` is coloured directly when some colour of `L(f)`
//! is free at both ends. Otherwise a fan is grown at one endpoint `v`. A fan
//! whose last leaf sees a free colour that is also free at `v` is rotated.
//! When every free colour at the last leaf is already a fan colour, a CIP from
//! that leaf frees a colour that is absent at `v`; the search first avoids `v`
//! entirely and only then allows paths through it.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cip::{
    check_forbidden, find_cip_with, format_trace, interchange_in_place, Cip, CipQuery, ForbiddenChoice,
    Restriction, SearchLog, DEFAULT_NODE_LIMIT,
};
use crate::colouring::{check_edge_colouring, check_total_colouring, PartialEdgeColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::lists::{
    greedy_vertex_colouring, residual_edge_lists, Color, ListAssignment, TotalListAssignment,
};

/// A Vizing fan at `centre`. `leaves[0]` is the far end of the uncoloured
/// edge; the edge to `leaves[h + 1]` carries `colours[h]`, and `colours[h]` is
/// in the list of the edge to `leaves[h]` and missing at `leaves[h]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub centre: Vertex,
    pub uncoloured: EdgeId,
    pub leaves: Vec<Vertex>,
    pub colours: Vec<Color>,
}

impl Fan {
    pub fn new(g: &Graph, centre: Vertex, uncoloured: EdgeId) -> Self {
        Fan {
            centre,
            uncoloured,
            leaves: vec![g.opposite(uncoloured, centre)],
            colours: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// Edge from the centre to `leaves[h]`.
    pub fn edge(&self, g: &Graph, h: usize) -> EdgeId {
        if h == 0 {
            self.uncoloured
        } else {
            g.edge_between(self.centre, self.leaves[h]).expect("fan leaf is a neighbour")
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.leaves.contains(&v)
    }

    /// Index `h` with `colours[h] == c`.
    pub fn position_of_colour(&self, c: Color) -> Option<usize> {
        self.colours.iter().position(|&t| t == c)
    }

    fn push(&mut self, leaf: Vertex, colour: Color) {
        self.colours.push(colour);
        self.leaves.push(leaf);
    }

    /// Number of leading leaves for which every fan condition holds.
    pub fn valid_prefix(&self, g: &Graph, lists: &ListAssignment, col: &PartialEdgeColoring) -> usize {
        if col.colour(self.uncoloured).is_some() {
            return 0;
        }
        for h in 1..self.leaves.len() {
            let t = self.colours[h - 1];
            if col.colour(self.edge(g, h)) != Some(t) {
                return h;
            }
            let prev = self.leaves[h - 1];
            if !lists.list(self.edge(g, h - 1)).contains(t) || !col.is_missing(prev, t) {
                return h;
            }
        }
        self.leaves.len()
    }

    /// Errors unless every fan condition holds for the whole fan.
    pub fn check(&self, g: &Graph, lists: &ListAssignment, col: &PartialEdgeColoring) -> Result<()> {
        let mut seen = self.leaves.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.leaves.len() || self.colours.len() + 1 != self.leaves.len() {
            return Err(Error::Invariant(format!("malformed fan {self:?}")));
        }
        let ok = self.valid_prefix(g, lists, col);
        if ok != self.leaves.len() {
            return Err(Error::Invariant(format!(
                "fan at {} breaks its invariant at leaf {}",
                self.centre, self.leaves[ok]
            )));
        }
        Ok(())
    }

    fn truncate(&mut self, len: usize) {
        self.leaves.truncate(len.max(1));
        self.colours.truncate(self.leaves.len() - 1);
    }

    /// Smallest `h`, then smallest colour `c` in `L(v leaves[h])`, with `c`
    /// missing at both `leaves[h]` and the centre.
    fn free_rotation(&self, g: &Graph, lists: &ListAssignment, col: &PartialEdgeColoring) -> Option<(usize, Color)> {
        (0..self.leaves.len()).find_map(|h| {
            lists
                .list(self.edge(g, h))
                .iter()
                .find(|&c| col.is_missing(self.leaves[h], c) && col.is_missing(self.centre, c))
                .map(|c| (h, c))
        })
    }

    /// Shifts colours down the fan up to leaf `h`, which gets `last`. The
    /// uncoloured edge ends up coloured.
    fn rotate(&self, g: &Graph, col: &mut PartialEdgeColoring, h: usize, last: Color) -> Result<()> {
        let mut changes: Vec<(EdgeId, Color)> = (0..h).map(|k| (self.edge(g, k), self.colours[k])).collect();
        changes.push((self.edge(g, h), last));
        col.recolour_all(g, &changes)
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Skip the list size precondition.
    pub force: bool,
    /// Keep a snapshot of every CIP query for later replay.
    pub harvest: bool,
    /// Fan attempts per edge before falling back.
    pub max_attempts: usize,
    pub node_limit: u64,
    /// Record every CIP search event in `SolveReport::cip_trace`.
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            force: false,
            harvest: false,
            max_attempts: 6,
            node_limit: DEFAULT_NODE_LIMIT,
            trace: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EdgeStats {
    pub edge: EdgeId,
    pub direct: bool,
    pub fan_len: usize,
    pub cip_lengths: Vec<usize>,
    pub interchanges: usize,
    /// Interchanges whose path was allowed through the fan centre.
    pub through_centre: usize,
    pub restarts: usize,
    /// Coloured by single Kempe-style interchanges at the two ends of the edge.
    pub end_swaps: bool,
    /// CIP searches that came back empty even though paths through the
    /// centre were allowed.
    pub tripwires: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveSummary {
    pub edges: usize,
    pub direct: usize,
    pub fans: usize,
    pub max_fan_len: usize,
    pub cips: usize,
    pub max_cip_len: usize,
    pub interchanges: usize,
    pub through_centre: usize,
    pub restarts: usize,
    pub end_swaps: usize,
    pub tripwires: usize,
}

/// A CIP query as it was posed, with the colouring at that moment.
#[derive(Debug, Clone)]
pub struct HarvestedQuery {
    pub colours: Vec<Option<Color>>,
    pub query: CipQuery,
    pub found: Option<Cip>,
}

#[derive(Debug, Clone, Default)]
pub struct SolveReport {
    pub colouring: Vec<Color>,
    pub per_edge: Vec<EdgeStats>,
    pub harvested: Vec<HarvestedQuery>,
    /// Search events, one line each, when tracing is on.
    pub cip_trace: String,
    /// Every CIP interchanged, in order, when tracing is on.
    pub applied: Vec<Cip>,
}

impl SolveReport {
    pub fn summary(&self) -> SolveSummary {
        let mut s = SolveSummary {
            edges: self.per_edge.len(),
            ..Default::default()
        };
        for e in &self.per_edge {
            s.direct += e.direct as usize;
            s.fans += (!e.direct) as usize;
            s.max_fan_len = s.max_fan_len.max(e.fan_len);
            s.cips += e.cip_lengths.len();
            s.max_cip_len = s.max_cip_len.max(e.cip_lengths.iter().copied().max().unwrap_or(0));
            s.interchanges += e.interchanges;
            s.through_centre += e.through_centre;
            s.restarts += e.restarts;
            s.end_swaps += e.end_swaps as usize;
            s.tripwires += e.tripwires;
        }
        s
    }
}

/// Everything needed to reproduce a failed extension.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveFailure {
    pub edge: EdgeId,
    pub reason: String,
    pub trace: Vec<String>,
    pub vertex_count: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    pub edge_lists: Vec<Vec<Color>>,
    pub colouring: Vec<Option<Color>>,
}

impl SolveFailure {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}

/// JSON shape of a colouring result.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ColouringFile {
    pub edge_colours: Vec<Color>,
    pub vertex_colours: Option<Vec<Color>>,
    #[serde(default)]
    pub stats: serde_json::Value,
}

pub fn colour_edges(g: &Graph, lists: &ListAssignment) -> Result<SolveReport> {
    colour_edges_with(g, lists, &SolveOptions::default())
}

/// Colours the edges in id order, one `extend_one_edge` call each, and
/// re-checks the final colouring independently.
pub fn colour_edges_with(g: &Graph, lists: &ListAssignment, opts: &SolveOptions) -> Result<SolveReport> {
    if lists.len() != g.edge_count() {
        return Err(Error::InvalidInput(format!(
            "{} lists for {} edges",
            lists.len(),
            g.edge_count()
        )));
    }
    if !opts.force {
        let required = g.max_degree() + 2;
        if let Some(e) = (0..g.edge_count()).find(|&e| lists.list(e).len() < required) {
            return Err(Error::ListTooSmall {
                edge: e,
                size: lists.list(e).len(),
                required,
            });
        }
    }
    let mut col = PartialEdgeColoring::new(g);
    let mut report = SolveReport::default();
    for f in 0..g.edge_count() {
        let before = col.coloured_count();
        let stats = extend_inner(g, lists, &mut col, f, opts, &mut report)?;
        if col.coloured_count() != before + 1 || col.colour(f).is_none() {
            return Err(Error::Invariant(format!("edge {f} did not add exactly one coloured edge")));
        }
        report.per_edge.push(stats);
    }
    let colours = col.colours().to_vec();
    check_edge_colouring(g, lists, &colours).map_err(|v| Error::Invariant(v.to_string()))?;
    report.colouring = col.complete().expect("every edge coloured");
    Ok(report)
}

/// Colours the single uncoloured edge `f`, recolouring others as needed.
pub fn extend_one_edge(
    g: &Graph,
    lists: &ListAssignment,
    col: &PartialEdgeColoring,
    f: EdgeId,
) -> Result<PartialEdgeColoring> {
    let mut out = col.clone();
    extend_inner(g, lists, &mut out, f, &SolveOptions::default(), &mut SolveReport::default())?;
    Ok(out)
}

/// Like `extend_one_edge`, also returning the statistics for `f`.
pub fn extend_one_edge_with(
    g: &Graph,
    lists: &ListAssignment,
    col: &mut PartialEdgeColoring,
    f: EdgeId,
    opts: &SolveOptions,
) -> Result<EdgeStats> {
    extend_inner(g, lists, col, f, opts, &mut SolveReport::default())
}

struct Extension<'a> {
    g: &'a Graph,
    lists: &'a ListAssignment,
    opts: &'a SolveOptions,
    sink: &'a mut SolveReport,
    stats: EdgeStats,
    trace: Vec<String>,
}

enum Outcome {
    Done,
    GaveUp,
}

fn extend_inner(
    g: &Graph,
    lists: &ListAssignment,
    col: &mut PartialEdgeColoring,
    f: EdgeId,
    opts: &SolveOptions,
    sink: &mut SolveReport,
) -> Result<EdgeStats> {
    if col.colour(f).is_some() {
        return Err(Error::InvalidInput(format!("edge {f} is already coloured")));
    }
    let (a, b) = g.endpoints(f);
    let mut ext = Extension {
        g,
        lists,
        opts,
        sink,
        stats: EdgeStats {
            edge: f,
            ..Default::default()
        },
        trace: Vec::new(),
    };

    if let Some(c) = lists.list(f).iter().find(|&c| col.is_missing(a, c) && col.is_missing(b, c)) {
        col.assign(g, f, c)?;
        ext.stats.direct = true;
        return Ok(ext.stats);
    }

    let first = if col.coloured_degree(b) > col.coloured_degree(a) { b } else { a };
    for attempt in 0..opts.max_attempts {
        let v = if attempt % 2 == 0 { first } else { g.opposite(f, first) };
        match ext.run_fan(col, f, v, attempt)? {
            Outcome::Done => return Ok(ext.stats),
            Outcome::GaveUp => {
                ext.stats.restarts += 1;
                ext.note(format!("restart after attempt {attempt}"));
            }
        }
    }
    if ext.end_swaps(col, f)? {
        ext.stats.end_swaps = true;
        return Ok(ext.stats);
    }
    Err(Error::SolveFailure(Box::new(SolveFailure {
        edge: f,
        reason: format!("no fan attempt or end swap coloured edge {f}"),
        trace: ext.trace,
        vertex_count: g.vertex_count(),
        edges: g.edges().to_vec(),
        edge_lists: lists.lists().iter().map(|l| l.as_slice().to_vec()).collect(),
        colouring: col.colours().to_vec(),
    })))
}

impl Extension<'_> {
    fn note(&mut self, line: String) {
        self.trace.push(line);
    }

    fn search(&mut self, col: &PartialEdgeColoring, query: CipQuery) -> Result<Option<Cip>> {
        let mut log = SearchLog {
            record: self.opts.trace,
            ..Default::default()
        };
        let res = find_cip_with(self.g, self.lists, col, &query, self.opts.node_limit, &mut log);
        let found = match res {
            Ok(cip) => Some(cip),
            Err(Error::NoCipFound { .. }) => None,
            Err(e) => return Err(e),
        };
        if let Some(cip) = &found {
            check_forbidden(cip, &query.forbidden).map_err(|v| Error::Invariant(v.to_string()))?;
        }
        if self.opts.trace {
            self.sink.cip_trace.push_str(&format_trace(&log.events, found.as_ref()));
        }
        if self.opts.harvest {
            self.sink.harvested.push(HarvestedQuery {
                colours: col.colours().to_vec(),
                query,
                found: found.clone(),
            });
        }
        Ok(found)
    }

    fn interchange(&mut self, col: &mut PartialEdgeColoring, cip: &Cip) -> Result<()> {
        interchange_in_place(self.g, self.lists, col, cip)?;
        self.stats.interchanges += 1;
        self.stats.cip_lengths.push(cip.len());
        self.note(format!("interchange {}", cip.to_json()));
        if self.opts.trace {
            self.sink.applied.push(cip.clone());
        }
        Ok(())
    }

    fn run_fan(&mut self, col: &mut PartialEdgeColoring, f: EdgeId, v: Vertex, attempt: usize) -> Result<Outcome> {
        let g = self.g;
        let lists = self.lists;
        let mut fan = Fan::new(g, v, f);
        self.note(format!("fan centre {v} leaf {}", fan.leaves[0]));
        let budget = 4 * (g.degree(v) + 2);
        let mut rounds = 0usize;
        loop {
            fan.check(g, lists, col)?;
            self.stats.fan_len = self.stats.fan_len.max(fan.len());

            if let Some((h, c)) = fan.free_rotation(g, lists, col) {
                fan.rotate(g, col, h, c)?;
                self.note(format!("rotate {} leaves, last colour {c}", h + 1));
                return Ok(Outcome::Done);
            }

            let i = fan.len() - 1;
            let yi = fan.leaves[i];
            let ei = fan.edge(g, i);
            let free_at_leaf: Vec<Color> = lists.list(ei).iter().filter(|&c| col.is_missing(yi, c)).collect();
            let grow = free_at_leaf.iter().find_map(|&c| {
                let e = col.edge_at(v, c)?;
                let z = g.opposite(e, v);
                (!fan.contains(z)).then_some((z, c))
            });
            if let Some((z, c)) = grow {
                fan.push(z, c);
                self.note(format!("extend leaf {z} colour {c}"));
                continue;
            }

            // every colour free at the last leaf is already a fan colour
            rounds += 1;
            if rounds > budget {
                return Ok(Outcome::GaveUp);
            }
            let starts: Vec<Color> = lists.list(ei).iter().filter(|&c| col.is_missing(v, c)).collect();
            if starts.is_empty() {
                return Ok(Outcome::GaveUp);
            }
            let mut forbidden = ForbiddenChoice::new();
            for h in 0..i {
                forbidden.ban(fan.leaves[h], fan.colours[h]);
            }

            let mut strict = None;
            for &a1 in &starts {
                let Some(q) = CipQuery::at_colour(col, yi, a1) else {
                    continue;
                };
                let q = q.restricted(Restriction::Exclude(v)).forbidding(forbidden.clone());
                if let Some(cip) = self.search(col, q)? {
                    strict = Some(cip);
                    break;
                }
            }
            if let Some(cip) = strict {
                self.interchange(col, &cip)?;
                // the path avoided the centre and every banned colour, so the fan is intact
                fan.check(g, lists, col)?;
                continue;
            }

            let a1 = starts[(attempt + rounds) % starts.len()];
            let Some(q) = CipQuery::at_colour(col, yi, a1) else {
                return Ok(Outcome::GaveUp);
            };
            let q = q.restricted(Restriction::Prefer(v)).forbidding(forbidden);
            match self.search(col, q)? {
                Some(cip) => {
                    self.interchange(col, &cip)?;
                    self.stats.through_centre += 1;
                    let keep = fan.valid_prefix(g, lists, col);
                    if keep < fan.len() {
                        self.note(format!("fan cut back to {keep} leaves"));
                        fan.truncate(keep);
                    }
                }
                None => {
                    self.stats.tripwires += 1;
                    self.note(format!("no CIP from {yi} with first colour {a1}"));
                    return Ok(Outcome::GaveUp);
                }
            }
        }
    }

    /// Frees one colour of `L(f)` at each end by separate interchanges, each
    /// kept away from the other end.
    fn end_swaps(&mut self, col: &mut PartialEdgeColoring, f: EdgeId) -> Result<bool> {
        let g = self.g;
        let (a, b) = g.endpoints(f);
        for c in self.lists.list(f).iter() {
            let mut trial = col.clone();
            let mut ok = true;
            for (x, other) in [(a, b), (b, a)] {
                let Some(q) = CipQuery::at_colour(&trial, x, c) else {
                    continue;
                };
                let q = q.restricted(Restriction::Exclude(other));
                match self.search(&trial, q) {
                    Ok(Some(cip)) => self.interchange(&mut trial, &cip)?,
                    Ok(None) => {
                        ok = false;
                        break;
                    }
                    // the other end may sit on the start edge only if it is f itself
                    Err(Error::InvalidInput(_)) => {
                        ok = false;
                        break;
                    }
                    Err(e) => return Err(e),
                }
            }
            if ok && trial.is_missing(a, c) && trial.is_missing(b, c) {
                trial.assign(g, f, c)?;
                *col = trial;
                self.note(format!("end swaps freed colour {c}"));
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Total colouring from the palette `{0, .., palette_size - 1}`.
pub fn total_colour(g: &Graph, palette_size: usize) -> Result<TotalColoring> {
    let required = g.max_degree() + 4;
    if palette_size < required {
        return Err(Error::InvalidInput(format!(
            "palette of {palette_size} colours, at least {required} required"
        )));
    }
    total_colour_lists(g, &TotalListAssignment::uniform(g, palette_size))
}

pub fn total_colour_lists(g: &Graph, lists: &TotalListAssignment) -> Result<TotalColoring> {
    total_colour_lists_with(g, lists, &SolveOptions::default()).map(|(tc, _)| tc)
}

/// Greedy vertex colouring, then list edge colouring of what is left of each
/// edge list once both end colours are removed.
pub fn total_colour_lists_with(
    g: &Graph,
    lists: &TotalListAssignment,
    opts: &SolveOptions,
) -> Result<(TotalColoring, SolveReport)> {
    if !opts.force {
        let required = g.max_degree() + 4;
        if let Some(e) = (0..g.edge_count()).find(|&e| lists.edge_list(e).len() < required) {
            return Err(Error::ListTooSmall {
                edge: e,
                size: lists.edge_list(e).len(),
                required,
            });
        }
        if let Some(v) = (0..g.vertex_count()).find(|&v| lists.vertex_list(v).len() < required) {
            return Err(Error::InvalidInput(format!(
                "vertex {v} has a list of size {}, at least {required} required",
                lists.vertex_list(v).len()
            )));
        }
    }
    let vertex_colours = greedy_vertex_colouring(g, lists.vertex_lists())?;
    let residual = residual_edge_lists(g, lists, &vertex_colours)?;
    let report = colour_edges_with(g, &residual, opts)?;
    let tc = TotalColoring {
        vertex_colours,
        edge_colours: report.colouring.clone(),
    };
    check_total_colouring(g, lists, &tc).map_err(|v| Error::Invariant(v.to_string()))?;
    Ok((tc, report))
}

/// Human-readable account of a fan: one line per leaf.
pub fn describe_fan(fan: &Fan) -> String {
    let mut out = format!("centre {}\n", fan.centre);
    for (h, y) in fan.leaves.iter().enumerate() {
        match fan.colours.get(h) {
            Some(t) => writeln!(out, "  y{} = {y}, t{} = {t}", h + 1, h + 1).unwrap(),
            None => writeln!(out, "  y{} = {y}", h + 1).unwrap(),
        }
    }
    out
}
