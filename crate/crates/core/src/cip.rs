//! Colour interchange paths.
//!
//! A CIP is a path `p1 p2 .. ps` with colours `a1 .. as` such that edge
//! `p_i p_{i+1}` currently carries `a_i` and may be recoloured `a_{i+1}`
//! along the whole path at once, leaving a proper list colouring. After the
//! interchange `a1` is free at `p1`.
//!
//! The search is an exhaustive depth-first backtrack over the recolour choice
//! at each step. A restriction vertex `w` steers the path away from `w`: with
//! [`Restriction::Prefer`] continuations into `w` are tried last, with
//! [`Restriction::Exclude`] they are never taken. A [`ForbiddenChoice`] bans
//! colours from being newly placed on path edges at particular vertices.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::colouring::PartialEdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::lists::{Color, ListAssignment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cip {
    /// `p1 .. ps`, pairwise distinct, `s >= 2`.
    pub vertices: Vec<Vertex>,
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub edges: Vec<EdgeId>,
    /// `a1 .. as`; `edges[i]` goes from `colours[i]` to `colours[i + 1]`.
    pub colours: Vec<Color>,
    pub restricted_to: Option<Vertex>,
    /// Neighbours of `restricted_to` on the path where the colour leading
    /// into `restricted_to` was admissible but not taken.
    pub restricted_vertices: Vec<Vertex>,
}

impl Cip {
    /// Number of vertices `s`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn first_colouring(&self) -> &[Color] {
        &self.colours[..self.colours.len() - 1]
    }

    pub fn second_colouring(&self) -> &[Color] {
        &self.colours[1..]
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&p| p == v)
    }

    /// The same path walked backwards; it undoes this interchange.
    pub fn reversed(&self) -> Cip {
        let rev = |v: &[usize]| v.iter().rev().copied().collect::<Vec<_>>();
        Cip {
            vertices: rev(&self.vertices),
            edges: rev(&self.edges),
            colours: self.colours.iter().rev().copied().collect(),
            restricted_to: None,
            restricted_vertices: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            path: &'a [Vertex],
            colours: &'a [Color],
        }
        serde_json::to_string(&Out {
            path: &self.vertices,
            colours: &self.colours,
        })
        .unwrap()
    }

    /// Graphviz rendering with `before/after` edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cip {\n");
        for (i, &v) in self.vertices.iter().enumerate() {
            let shape = if Some(v) == self.restricted_to {
                "doublecircle"
            } else {
                "circle"
            };
            writeln!(out, "  {v} [label=\"p{} = {v}\", shape={shape}];", i + 1).unwrap();
        }
        for i in 0..self.edges.len() {
            writeln!(
                out,
                "  {} -- {} [label=\"{}/{}\"];",
                self.vertices[i],
                self.vertices[i + 1],
                self.colours[i],
                self.colours[i + 1]
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    /// Continue into the vertex only when nothing else works.
    Prefer(Vertex),
    /// Never enter the vertex.
    Exclude(Vertex),
}

impl Restriction {
    pub fn vertex(self) -> Vertex {
        match self {
            Restriction::Prefer(w) | Restriction::Exclude(w) => w,
        }
    }
}

/// Per-vertex colours that an interchange must not introduce at that vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForbiddenChoice {
    banned: BTreeMap<Vertex, Vec<Color>>,
}

impl ForbiddenChoice {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ban(&mut self, v: Vertex, c: Color) {
        let set = self.banned.entry(v).or_default();
        if !set.contains(&c) {
            set.push(c);
        }
    }

    pub fn is_banned(&self, v: Vertex, c: Color) -> bool {
        self.banned.get(&v).is_some_and(|s| s.contains(&c))
    }

    pub fn is_empty(&self) -> bool {
        self.banned.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &[Color])> {
        self.banned.iter().map(|(&v, s)| (v, s.as_slice()))
    }
}

/// Everything `find_cip` needs besides the graph, lists and colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipQuery {
    /// `p1`.
    pub start: Vertex,
    /// `p1 p2`; must currently carry `first_colour`.
    pub edge: EdgeId,
    pub first_colour: Color,
    pub restriction: Option<Restriction>,
    pub forbidden: ForbiddenChoice,
}

impl CipQuery {
    pub fn new(start: Vertex, edge: EdgeId, first_colour: Color) -> Self {
        CipQuery {
            start,
            edge,
            first_colour,
            restriction: None,
            forbidden: ForbiddenChoice::new(),
        }
    }

    pub fn restricted(mut self, r: Restriction) -> Self {
        self.restriction = Some(r);
        self
    }

    pub fn forbidding(mut self, forbidden: ForbiddenChoice) -> Self {
        self.forbidden = forbidden;
        self
    }

    /// The query for the edge at `start` coloured `colour`, if any.
    pub fn at_colour(col: &PartialEdgeColoring, start: Vertex, colour: Color) -> Option<Self> {
        col.edge_at(start, colour)
            .map(|e| CipQuery::new(start, e, colour))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceEvent {
    /// The path entered `vertex` along the edge currently coloured `colour`.
    Push { vertex: Vertex, colour: Color },
    Pop,
    Accept { len: usize },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Push { vertex, colour } => write!(f, "PUSH {vertex} {colour}"),
            TraceEvent::Pop => write!(f, "POP"),
            TraceEvent::Accept { len } => write!(f, "ACCEPT s={len}"),
        }
    }
}

/// Search bookkeeping: node count and, when `record` is set, trace events.
#[derive(Debug, Clone, Default)]
pub struct SearchLog {
    pub explored: u64,
    pub record: bool,
    pub events: Vec<TraceEvent>,
}

impl SearchLog {
    pub fn recording() -> Self {
        SearchLog {
            record: true,
            ..Default::default()
        }
    }

    fn push(&mut self, ev: TraceEvent) {
        if self.record {
            self.events.push(ev);
        }
    }
}

/// One line per event, then the path as JSON when one was found.
pub fn format_trace(events: &[TraceEvent], result: Option<&Cip>) -> String {
    let mut out = String::new();
    for ev in events {
        writeln!(out, "{ev}").unwrap();
    }
    if let Some(cip) = result {
        writeln!(out, "{}", cip.to_json()).unwrap();
    }
    out
}

pub const DEFAULT_NODE_LIMIT: u64 = 2_000_000;

struct Candidate {
    colour: Color,
    /// Edge at the far end currently carrying `colour`, and where it leads.
    next: Option<(EdgeId, Vertex)>,
}

struct Frame {
    candidates: Vec<Candidate>,
    idx: usize,
}

/// Searches with the default node limit and no trace.
pub fn find_cip(
    g: &Graph,
    lists: &ListAssignment,
    col: &PartialEdgeColoring,
    query: &CipQuery,
) -> Result<Cip> {
    find_cip_with(g, lists, col, query, DEFAULT_NODE_LIMIT, &mut SearchLog::default())
}

/// Exhaustive depth-first search for a CIP starting with `query.edge`.
///
/// At each step the recolour candidates for the last path edge are tried in
/// this order: colours that end the path, then colours that continue it, and
/// (under `Prefer(w)`) continuations into `w` last; ascending colour within
/// each group. `NoCipFound` with `exhaustive: true` proves that no CIP exists
/// under the given constraints.
pub fn find_cip_with(
    g: &Graph,
    lists: &ListAssignment,
    col: &PartialEdgeColoring,
    query: &CipQuery,
    node_limit: u64,
    log: &mut SearchLog,
) -> Result<Cip> {
    let p1 = query.start;
    let e1 = query.edge;
    if e1 >= g.edge_count() || p1 >= g.vertex_count() {
        return Err(Error::InvalidInput("start edge or vertex out of range".into()));
    }
    let (a, b) = g.endpoints(e1);
    if p1 != a && p1 != b {
        return Err(Error::InvalidInput(format!("vertex {p1} is not on edge {e1}")));
    }
    let p2 = g.opposite(e1, p1);
    if col.colour(e1) != Some(query.first_colour) {
        return Err(Error::InvalidInput(format!(
            "edge {e1} is coloured {:?}, not {}",
            col.colour(e1),
            query.first_colour
        )));
    }
    if let Some(r) = query.restriction {
        let w = r.vertex();
        if w == p1 || w == p2 {
            return Err(Error::InvalidInput(format!(
                "restriction vertex {w} lies on the start edge"
            )));
        }
        if let Some((v, _)) = query.forbidden.iter().find(|&(v, _)| !g.adjacent(v, w)) {
            return Err(Error::InvalidInput(format!(
                "forbidden colours given at {v}, which is not a neighbour of {w}"
            )));
        }
    }

    let mut on_path = vec![false; g.vertex_count()];
    on_path[p1] = true;
    on_path[p2] = true;
    let mut vertices = vec![p1, p2];
    let mut edges = vec![e1];
    let mut colours = vec![query.first_colour];
    log.push(TraceEvent::Push {
        vertex: p2,
        colour: query.first_colour,
    });

    let candidates = |vertices: &[Vertex], edges: &[EdgeId], colours: &[Color], on_path: &[bool]| {
        let k = edges.len();
        let here = vertices[k - 1];
        let there = vertices[k];
        let edge = edges[k - 1];
        let current = colours[k - 1];
        let prev = if k >= 2 { Some(edges[k - 2]) } else { None };
        let mut ends = Vec::new();
        let mut onward = Vec::new();
        let mut into_w = Vec::new();
        for c in lists.list(edge).iter() {
            if c == current {
                continue;
            }
            if let Some(f) = col.edge_at(here, c) {
                if Some(f) != prev {
                    continue;
                }
            }
            if query.forbidden.is_banned(here, c) || query.forbidden.is_banned(there, c) {
                continue;
            }
            match col.edge_at(there, c) {
                None => ends.push(Candidate { colour: c, next: None }),
                Some(f) => {
                    let z = g.opposite(f, there);
                    if on_path[z] {
                        continue;
                    }
                    match query.restriction {
                        Some(Restriction::Exclude(w)) if z == w => {}
                        Some(Restriction::Prefer(w)) if z == w => into_w.push(Candidate {
                            colour: c,
                            next: Some((f, z)),
                        }),
                        _ => onward.push(Candidate {
                            colour: c,
                            next: Some((f, z)),
                        }),
                    }
                }
            }
        }
        ends.extend(onward);
        ends.extend(into_w);
        Frame {
            candidates: ends,
            idx: 0,
        }
    };

    let mut stack = vec![candidates(&vertices, &edges, &colours, &on_path)];
    loop {
        let Some(frame) = stack.last_mut() else {
            return Err(Error::NoCipFound {
                explored: log.explored,
                exhaustive: true,
            });
        };
        if frame.idx == frame.candidates.len() {
            stack.pop();
            log.push(TraceEvent::Pop);
            if !stack.is_empty() {
                let z = vertices.pop().unwrap();
                on_path[z] = false;
                edges.pop();
                colours.pop();
            }
            continue;
        }
        let cand = &frame.candidates[frame.idx];
        frame.idx += 1;
        log.explored += 1;
        if log.explored > node_limit {
            return Err(Error::NoCipFound {
                explored: log.explored,
                exhaustive: false,
            });
        }
        colours.push(cand.colour);
        match cand.next {
            None => {
                log.push(TraceEvent::Accept { len: vertices.len() });
                let restricted_vertices = match query.restriction {
                    Some(r) => restricted_vertices(g, lists, col, &vertices, &edges, &colours, r.vertex()),
                    None => Vec::new(),
                };
                return Ok(Cip {
                    vertices,
                    edges,
                    colours,
                    restricted_to: query.restriction.map(Restriction::vertex),
                    restricted_vertices,
                });
            }
            Some((f, z)) => {
                log.push(TraceEvent::Push {
                    vertex: z,
                    colour: cand.colour,
                });
                vertices.push(z);
                edges.push(f);
                on_path[z] = true;
                let next = candidates(&vertices, &edges, &colours, &on_path);
                stack.push(next);
            }
        }
    }
}

fn restricted_vertices(
    g: &Graph,
    lists: &ListAssignment,
    col: &PartialEdgeColoring,
    vertices: &[Vertex],
    edges: &[EdgeId],
    colours: &[Color],
    w: Vertex,
) -> Vec<Vertex> {
    let mut out = Vec::new();
    for k in 1..vertices.len() {
        let pk = vertices[k];
        if pk == w {
            continue;
        }
        let Some(to_w) = g.edge_between(pk, w) else {
            continue;
        };
        let Some(c) = col.colour(to_w) else {
            continue;
        };
        let incoming = edges[k - 1];
        if lists.list(incoming).contains(c) && c != colours[k - 1] && c != colours[k] {
            out.push(pk);
        }
    }
    out
}

/// A broken CIP clause, with its location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CipViolation {
    Malformed(String),
    RepeatedVertex { vertex: Vertex },
    NotAnEdge { index: usize },
    ColourNotInList { index: usize, colour: Color },
    ColourUnchanged { index: usize },
    FirstColouringMismatch { index: usize, expected: Color, found: Option<Color> },
    SecondColouringClash { vertex: Vertex, colour: Color, edge: EdgeId },
    RestrictedVertex { vertex: Vertex, clause: &'static str },
    Forbidden { vertex: Vertex, colour: Color },
}

impl fmt::Display for CipViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CipViolation::Malformed(s) => write!(f, "malformed path: {s}"),
            CipViolation::RepeatedVertex { vertex } => {
                write!(f, "path vertices not distinct: {vertex} repeats")
            }
            CipViolation::NotAnEdge { index } => {
                write!(f, "path edge {index} does not join consecutive vertices")
            }
            CipViolation::ColourNotInList { index, colour } => {
                write!(f, "colour {colour} not in the list of path edge {index}")
            }
            CipViolation::ColourUnchanged { index } => {
                write!(f, "path edge {index} keeps its colour")
            }
            CipViolation::FirstColouringMismatch {
                index,
                expected,
                found,
            } => write!(
                f,
                "path edge {index} should carry {expected}, carries {found:?}"
            ),
            CipViolation::SecondColouringClash {
                vertex,
                colour,
                edge,
            } => write!(
                f,
                "after interchange colour {colour} clashes with edge {edge} at vertex {vertex}"
            ),
            CipViolation::RestrictedVertex { vertex, clause } => {
                write!(f, "restricted vertex {vertex}: {clause}")
            }
            CipViolation::Forbidden { vertex, colour } => {
                write!(f, "interchange places forbidden colour {colour} at vertex {vertex}")
            }
        }
    }
}

/// Checks every CIP clause against the current colouring `col`.
pub fn validate_cip(
    g: &Graph,
    lists: &ListAssignment,
    col: &PartialEdgeColoring,
    cip: &Cip,
) -> std::result::Result<(), CipViolation> {
    let s = cip.vertices.len();
    if s < 2 {
        return Err(CipViolation::Malformed(format!("{s} vertices")));
    }
    if cip.edges.len() != s - 1 || cip.colours.len() != s {
        return Err(CipViolation::Malformed(format!(
            "{s} vertices, {} edges, {} colours",
            cip.edges.len(),
            cip.colours.len()
        )));
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in &cip.vertices {
        if v >= g.vertex_count() {
            return Err(CipViolation::Malformed(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CipViolation::RepeatedVertex { vertex: v });
        }
    }
    for (i, &e) in cip.edges.iter().enumerate() {
        if e >= g.edge_count() || g.edge_between(cip.vertices[i], cip.vertices[i + 1]) != Some(e) {
            return Err(CipViolation::NotAnEdge { index: i });
        }
        for c in [cip.colours[i], cip.colours[i + 1]] {
            if !lists.list(e).contains(c) {
                return Err(CipViolation::ColourNotInList { index: i, colour: c });
            }
        }
        if cip.colours[i] == cip.colours[i + 1] {
            return Err(CipViolation::ColourUnchanged { index: i });
        }
        if col.colour(e) != Some(cip.colours[i]) {
            return Err(CipViolation::FirstColouringMismatch {
                index: i,
                expected: cip.colours[i],
                found: col.colour(e),
            });
        }
    }
    for (k, &p) in cip.vertices.iter().enumerate() {
        let mut placed = Vec::with_capacity(2);
        if k >= 1 {
            placed.push((cip.edges[k - 1], cip.colours[k]));
        }
        if k + 1 < s {
            placed.push((cip.edges[k], cip.colours[k + 1]));
        }
        for &(_, c) in &placed {
            if let Some(f) = col.edge_at(p, c) {
                if !placed.iter().any(|&(e, _)| e == f) {
                    return Err(CipViolation::SecondColouringClash {
                        vertex: p,
                        colour: c,
                        edge: f,
                    });
                }
            }
        }
    }
    if let Some(w) = cip.restricted_to {
        for &pk in &cip.restricted_vertices {
            let fail = |clause| Err(CipViolation::RestrictedVertex { vertex: pk, clause });
            let Some(k) = cip.position(pk).filter(|&k| k >= 1) else {
                return fail("not an interior or end vertex of the path");
            };
            let Some(to_w) = g.edge_between(pk, w) else {
                return fail("not a neighbour of the restriction vertex");
            };
            let incoming = lists.list(cip.edges[k - 1]);
            if !incoming.contains(cip.colours[k - 1]) {
                return fail("incoming colour not in the incoming edge's list");
            }
            let shared = lists
                .list(to_w)
                .iter()
                .any(|c| c != cip.colours[k - 1] && incoming.contains(c));
            if !shared {
                return fail("no alternative colour shared with the edge to the restriction vertex");
            }
        }
    }
    Ok(())
}

/// Checks that the interchange never puts a banned colour at its vertex.
pub fn check_forbidden(cip: &Cip, forbidden: &ForbiddenChoice) -> std::result::Result<(), CipViolation> {
    for i in 0..cip.edges.len() {
        let c = cip.colours[i + 1];
        for v in [cip.vertices[i], cip.vertices[i + 1]] {
            if forbidden.is_banned(v, c) {
                return Err(CipViolation::Forbidden { vertex: v, colour: c });
            }
        }
    }
    Ok(())
}

/// Validates and then recolours the path, returning the new colouring.
pub fn apply_interchange(
    g: &Graph,
    lists: &ListAssignment,
    col: &PartialEdgeColoring,
    cip: &Cip,
) -> Result<PartialEdgeColoring> {
    let mut out = col.clone();
    interchange_in_place(g, lists, &mut out, cip)?;
    Ok(out)
}

pub fn interchange_in_place(
    g: &Graph,
    lists: &ListAssignment,
    col: &mut PartialEdgeColoring,
    cip: &Cip,
) -> Result<()> {
    validate_cip(g, lists, col, cip).map_err(|v| Error::Invariant(v.to_string()))?;
    let changes: Vec<(EdgeId, Color)> = cip
        .edges
        .iter()
        .zip(cip.second_colouring())
        .map(|(&e, &c)| (e, c))
        .collect();
    col.recolour_all(g, &changes)
}

/// Splits a CIP at 1-based vertex index `t` (`2 <= t <= s-1`), which needs
/// `a_{t-1} != a_{t+1}`. The head is `p1 .. pt` with colours `a1 .. at`, the
/// tail `pt .. ps` with colours `at .. as`.
pub fn cut_cip(cip: &Cip, t: usize) -> Result<(Cip, Cip)> {
    let s = cip.len();
    if t < 2 || t + 1 > s {
        return Err(Error::InvalidInput(format!("cut index {t} outside 2..={}", s.saturating_sub(1))));
    }
    // 0-based: a_{t-1} = colours[t-2], a_{t+1} = colours[t]
    if cip.colours[t - 2] == cip.colours[t] {
        return Err(Error::InvalidInput(format!(
            "cannot cut at {t}: colours on either side are both {}",
            cip.colours[t]
        )));
    }
    let keep = |range: &[Vertex], skip_first: bool| -> Vec<Vertex> {
        let inner = if skip_first { &range[1..] } else { range };
        cip.restricted_vertices
            .iter()
            .copied()
            .filter(|v| inner.contains(v))
            .collect()
    };
    let head = Cip {
        vertices: cip.vertices[..t].to_vec(),
        edges: cip.edges[..t - 1].to_vec(),
        colours: cip.colours[..t].to_vec(),
        restricted_to: cip.restricted_to,
        restricted_vertices: keep(&cip.vertices[..t], true),
    };
    let tail = Cip {
        vertices: cip.vertices[t - 1..].to_vec(),
        edges: cip.edges[t - 1..].to_vec(),
        colours: cip.colours[t - 1..].to_vec(),
        restricted_to: cip.restricted_to,
        restricted_vertices: keep(&cip.vertices[t - 1..], true),
    };
    Ok((head, tail))
}

/// The colouring in which the head of a cut is a CIP: the tail
/// `pt .. ps` already carries its second colouring.
pub fn with_tail_interchanged(
    g: &Graph,
    col: &PartialEdgeColoring,
    cip: &Cip,
    t: usize,
) -> Result<PartialEdgeColoring> {
    let mut out = col.clone();
    let changes: Vec<(EdgeId, Color)> = (t - 1..cip.edges.len())
        .map(|i| (cip.edges[i], cip.colours[i + 1]))
        .collect();
    out.recolour_all(g, &changes)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::check_partial_properness;
    use crate::lists::ColorSet;

    fn lists(g: &Graph, ls: &[&[Color]]) -> ListAssignment {
        ListAssignment::new(g, ls.iter().map(|l| ColorSet::new(l.to_vec())).collect()).unwrap()
    }

    fn path3() -> Graph {
        // u=0, v=1, w=2; uv = edge 0, vw = edge 1
        Graph::new(3, vec![(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn isolated_edge_is_its_own_cip() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let l = lists(&g, &[&[1, 2, 3, 4]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1)]).unwrap();
        let cip = find_cip(&g, &l, &col, &CipQuery::new(0, 0, 1)).unwrap();
        assert_eq!(cip.vertices, vec![0, 1]);
        assert_eq!(cip.colours, vec![1, 2]);
        let after = apply_interchange(&g, &l, &col, &cip).unwrap();
        assert_eq!(after.colours(), &[Some(2)]);
    }

    #[test]
    fn blocked_colour_is_skipped() {
        let g = path3();
        let l = lists(&g, &[&[1, 2, 3], &[2, 3, 4]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1), Some(2)]).unwrap();
        // 2 would continue along vw but 3 ends at v immediately
        let cip = find_cip(&g, &l, &col, &CipQuery::new(0, 0, 1)).unwrap();
        assert_eq!(cip.vertices, vec![0, 1]);
        assert_eq!(cip.colours, vec![1, 3]);
    }

    #[test]
    fn forced_two_edge_path() {
        let g = path3();
        let l = lists(&g, &[&[1, 2], &[2, 3, 4]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1), Some(2)]).unwrap();
        let cip = find_cip(&g, &l, &col, &CipQuery::new(0, 0, 1)).unwrap();
        assert_eq!(cip.vertices, vec![0, 1, 2]);
        assert_eq!(cip.colours, vec![1, 2, 3]);
        assert_eq!(validate_cip(&g, &l, &col, &cip), Ok(()));

        let after = apply_interchange(&g, &l, &col, &cip).unwrap();
        assert_eq!(after.colours(), &[Some(2), Some(3)]);
        assert!(check_partial_properness(&g, after.colours()).is_ok());
        assert!(after.is_missing(0, 1));

        let back = apply_interchange(&g, &l, &after, &cip.reversed()).unwrap();
        assert_eq!(back, col);
    }

    #[test]
    fn tampering_is_reported() {
        let g = path3();
        let l = lists(&g, &[&[1, 2], &[2, 3, 4]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1), Some(2)]).unwrap();
        let cip = find_cip(&g, &l, &col, &CipQuery::new(0, 0, 1)).unwrap();

        let mut bad = cip.clone();
        bad.colours[1] = 9;
        assert!(matches!(
            validate_cip(&g, &l, &col, &bad),
            Err(CipViolation::ColourNotInList { index: 0, colour: 9 })
        ));

        let mut bad = cip.clone();
        bad.vertices[2] = 0;
        assert!(matches!(
            validate_cip(&g, &l, &col, &bad),
            Err(CipViolation::RepeatedVertex { vertex: 0 })
        ));

        assert!(apply_interchange(&g, &l, &col, &bad).is_err());
    }

    #[test]
    fn first_colour_must_match() {
        let g = path3();
        let l = lists(&g, &[&[1, 2], &[2, 3, 4]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1), Some(2)]).unwrap();
        assert!(find_cip(&g, &l, &col, &CipQuery::new(0, 0, 2)).is_err());
        assert!(find_cip(&g, &l, &col, &CipQuery::new(2, 0, 1)).is_err());
    }

    #[test]
    fn exclusion_and_forbidden_colours() {
        // star centre 0 with leaves 1,2,3; edge 1-2 as well
        let g = Graph::new(4, vec![(1, 2), (0, 2), (0, 1), (0, 3)]).unwrap();
        let l = lists(&g, &[&[5, 6, 7], &[6, 8], &[1, 9], &[7, 9]]);
        let col =
            PartialEdgeColoring::from_colours(&g, &[Some(5), Some(6), Some(1), Some(7)]).unwrap();
        // from 1 along edge 1-2 coloured 5: colour 6 would walk into 0
        let q = CipQuery::new(1, 0, 5);
        let free = find_cip(&g, &l, &col, &q).unwrap();
        assert_eq!(free.colours, vec![5, 7]);

        let mut ban = ForbiddenChoice::new();
        ban.ban(2, 7);
        let q = CipQuery::new(1, 0, 5)
            .restricted(Restriction::Prefer(0))
            .forbidding(ban.clone());
        let via = find_cip(&g, &l, &col, &q).unwrap();
        assert_eq!(via.vertices, vec![1, 2, 0]);
        assert_eq!(check_forbidden(&via, &ban), Ok(()));

        let q = CipQuery::new(1, 0, 5)
            .restricted(Restriction::Exclude(0))
            .forbidding(ban);
        assert!(matches!(
            find_cip(&g, &l, &col, &q),
            Err(Error::NoCipFound { exhaustive: true, .. })
        ));
    }

    #[test]
    fn restricted_vertex_is_recorded_and_valid() {
        // path 3-1-2 plus both 1 and 2 adjacent to w = 0
        let g = Graph::new(4, vec![(3, 1), (1, 2), (1, 0), (2, 0)]).unwrap();
        let l = lists(&g, &[&[1, 2, 3], &[2, 3, 5, 6], &[3, 7], &[5, 8]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1), Some(2), Some(3), Some(5)])
            .unwrap();
        let q = CipQuery::new(3, 0, 1).restricted(Restriction::Exclude(0));
        let cip = find_cip(&g, &l, &col, &q).unwrap();
        assert!(!cip.vertices.contains(&0));
        assert_eq!(validate_cip(&g, &l, &col, &cip), Ok(()));
        assert_eq!(cip.restricted_vertices, vec![1, 2]);
    }

    #[test]
    fn cut_preconditions_and_shapes() {
        let cip = Cip {
            vertices: vec![10, 11, 12, 13],
            edges: vec![0, 1, 2],
            colours: vec![1, 2, 3, 4],
            restricted_to: None,
            restricted_vertices: vec![],
        };
        let (head, tail) = cut_cip(&cip, 2).unwrap();
        assert_eq!((head.vertices, head.colours), (vec![10, 11], vec![1, 2]));
        assert_eq!((tail.vertices, tail.colours), (vec![11, 12, 13], vec![2, 3, 4]));

        let alternating = Cip {
            colours: vec![1, 2, 1, 2],
            ..cip.clone()
        };
        assert!(cut_cip(&alternating, 2).is_err());
        assert!(cut_cip(&cip, 1).is_err());
        assert!(cut_cip(&cip, 4).is_err());
    }

    #[test]
    fn cut_parts_validate_in_their_ambient_colourings() {
        // path 0-1-2-3 with lists drawn from {1,2,5,6,7}
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let l = lists(&g, &[&[1, 2, 5], &[2, 5, 6], &[5, 6, 7]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1), Some(2), Some(5)]).unwrap();
        let cip = Cip {
            vertices: vec![0, 1, 2, 3],
            edges: vec![0, 1, 2],
            colours: vec![1, 2, 5, 6],
            restricted_to: None,
            restricted_vertices: vec![],
        };
        assert_eq!(validate_cip(&g, &l, &col, &cip), Ok(()));
        for t in 2..=3 {
            let (head, tail) = cut_cip(&cip, t).unwrap();
            let ambient = with_tail_interchanged(&g, &col, &cip, t).unwrap();
            assert_eq!(validate_cip(&g, &l, &ambient, &head), Ok(()));
            assert_eq!(validate_cip(&g, &l, &col, &tail), Ok(()));
        }
    }

    #[test]
    fn trace_and_dot_formats() {
        let g = path3();
        let l = lists(&g, &[&[1, 2], &[2, 3, 4]]);
        let col = PartialEdgeColoring::from_colours(&g, &[Some(1), Some(2)]).unwrap();
        let mut log = SearchLog::recording();
        let cip = find_cip_with(&g, &l, &col, &CipQuery::new(0, 0, 1), 100, &mut log).unwrap();
        assert_eq!(
            format_trace(&log.events, Some(&cip)),
            "PUSH 1 1\nPUSH 2 2\nACCEPT s=3\n{\"path\":[0,1,2],\"colours\":[1,2,3]}\n"
        );
        assert!(cip.to_dot().contains("1 -- 2 [label=\"2/3\"]"));
    }
}
