//! Exhaustive ground truth for small graphs: list edge colourability, the
//! chromatic index, the 2-improper chromatic index, the matching number and
//! the total independence number.

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::lists::{uniform_lists, Color, ColorSet, ListAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Maximum number of colour assignments tried.
    pub node_limit: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            node_limit: 100_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Vec<Color>),
    No,
    BudgetExceeded,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

/// Largest palette the bitmask search handles.
pub const MAX_PALETTE: usize = 128;
pub const DEFAULT_EDGE_GUARD: usize = 24;
/// `|V| + |E|` limit for the total independence number.
pub const DEFAULT_TOTAL_GUARD: usize = 64;

/// Whether a proper `L`-edge-colouring exists. Edges are assigned in id
/// order, colours ascending; each assignment removes the colour from the
/// domains of later incident edges and an emptied domain backtracks.
pub fn list_edge_colourable(g: &Graph, lists: &ListAssignment, budget: OracleBudget) -> Result<Decision> {
    colour_search(g, lists, 1, budget)
}

/// Search where every colour may appear on up to `cap` edges at a vertex.
fn colour_search(g: &Graph, lists: &ListAssignment, cap: u8, budget: OracleBudget) -> Result<Decision> {
    let palette = lists.palette();
    if palette.len() > MAX_PALETTE {
        return Err(Error::GuardExceeded {
            what: "oracle palette size",
            actual: palette.len(),
            limit: MAX_PALETTE,
        });
    }
    let m = g.edge_count();
    let domains: Vec<u128> = (0..m)
        .map(|e| {
            lists
                .list(e)
                .iter()
                .fold(0u128, |acc, c| acc | 1 << palette.binary_search(&c).unwrap())
        })
        .collect();
    // colours are interchangeable when every list is the same
    let symmetric = m > 0 && domains.iter().all(|&d| d == domains[0]);
    let mut s = Search {
        g,
        cap,
        symmetric,
        domains,
        load: vec![vec![0u8; palette.len()]; g.vertex_count()],
        chosen: vec![0; m],
        nodes: 0,
        limit: budget.node_limit,
    };
    match s.run(0, 0) {
        Some(true) => Ok(Decision::Yes(s.chosen.iter().map(|&i| palette[i]).collect())),
        Some(false) => Ok(Decision::No),
        None => Ok(Decision::BudgetExceeded),
    }
}

struct Search<'a> {
    g: &'a Graph,
    cap: u8,
    symmetric: bool,
    domains: Vec<u128>,
    /// Edges of each colour already at each vertex.
    load: Vec<Vec<u8>>,
    chosen: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    /// `Some(found)`, or `None` when the budget runs out. `used` marks the
    /// colours placed so far, for symmetry breaking.
    fn run(&mut self, e: EdgeId, used: u128) -> Option<bool> {
        if e == self.g.edge_count() {
            return Some(true);
        }
        let (u, v) = self.g.endpoints(e);
        let mut options = self.domains[e];
        if self.symmetric {
            // only the lowest never-used colour stands for all of them
            let fresh = options & !used;
            if fresh != 0 {
                options = (options & used) | (fresh & fresh.wrapping_neg());
            }
        }
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            if self.load[u][c] >= self.cap || self.load[v][c] >= self.cap {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return None;
            }
            self.chosen[e] = c;
            self.load[u][c] += 1;
            self.load[v][c] += 1;
            let bit = 1u128 << c;
            let mut pruned = Vec::new();
            let mut dead = false;
            for w in [u, v] {
                if self.load[w][c] < self.cap {
                    continue;
                }
                for &f in self.g.incident(w) {
                    if f > e && self.domains[f] & bit != 0 {
                        self.domains[f] &= !bit;
                        pruned.push(f);
                        dead |= self.domains[f] == 0;
                    }
                }
            }
            let res = if dead { Some(false) } else { self.run(e + 1, used | bit) };
            for f in pruned {
                self.domains[f] |= bit;
            }
            self.load[u][c] -= 1;
            self.load[v][c] -= 1;
            match res {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

fn guard_edges(g: &Graph, limit: usize) -> Result<()> {
    if g.edge_count() > limit {
        return Err(Error::GuardExceeded {
            what: "edge count",
            actual: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

fn decide(d: Decision, budget: OracleBudget) -> Result<bool> {
    match d {
        Decision::Yes(_) => Ok(true),
        Decision::No => Ok(false),
        Decision::BudgetExceeded => Err(Error::BudgetExceeded(budget.node_limit)),
    }
}

pub fn chromatic_index(g: &Graph, budget: OracleBudget) -> Result<usize> {
    chromatic_index_guarded(g, budget, DEFAULT_EDGE_GUARD)
}

/// Tries `Δ` colours, then `Δ + 1`. A graph with more edges than `k` times
/// the largest matching size is rejected for `k` without search.
pub fn chromatic_index_guarded(g: &Graph, budget: OracleBudget, max_edges: usize) -> Result<usize> {
    guard_edges(g, max_edges)?;
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(0);
    }
    let matching = g.vertex_count() / 2;
    for k in [delta, delta + 1] {
        if g.edge_count() > k * matching {
            continue;
        }
        if decide(list_edge_colourable(g, &uniform_lists(g, k), budget)?, budget)? {
            return Ok(k);
        }
    }
    Err(Error::Invariant(format!(
        "no edge colouring with {} colours found",
        delta + 1
    )))
}

pub fn improper2_chromatic_index(g: &Graph, budget: OracleBudget) -> Result<usize> {
    improper2_chromatic_index_guarded(g, budget, DEFAULT_EDGE_GUARD)
}

/// Least `k` such that the edges can be coloured from `{0, .., k-1}` with at
/// most two edges of each colour at every vertex.
pub fn improper2_chromatic_index_guarded(g: &Graph, budget: OracleBudget, max_edges: usize) -> Result<usize> {
    guard_edges(g, max_edges)?;
    if g.edge_count() == 0 {
        return Ok(0);
    }
    for k in 1..=g.max_degree() {
        let d = colour_search(g, &uniform_lists(g, k), 2, budget)?;
        if decide(d, budget)? {
            return Ok(k);
        }
    }
    Err(Error::Invariant("no 2-improper colouring with Δ colours".into()))
}

/// Checks that every vertex sees each colour at most twice.
pub fn is_2_improper(g: &Graph, colours: &[Color]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let mut seen: Vec<Color> = g.incident(v).iter().map(|&e| colours[e]).collect();
        seen.sort_unstable();
        seen.windows(3).all(|w| w[0] != w[2])
    })
}

/// Size of a maximum matching (augmenting paths with blossom shrinking).
pub fn matching_number(g: &Graph) -> usize {
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(g.vertex_count(), g.edge_count());
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for &(u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    maximum_matching(&pg).len()
}

/// Matching number of the spanning subgraph on the edges whose list
/// contains `sigma`.
pub fn colour_matching_number(g: &Graph, lists: &[ColorSet], sigma: Color) -> usize {
    matching_number(&g.spanning_subgraph(|e| lists[e].contains(sigma)))
}

pub fn total_independence_number(g: &Graph) -> Result<usize> {
    total_independence_number_guarded(g, DEFAULT_TOTAL_GUARD)
}

/// Largest set of vertices and edges, no two adjacent or incident, found by
/// branching on the highest-degree element of the conflict graph.
pub fn total_independence_number_guarded(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.vertex_count();
    let items = n + g.edge_count();
    if items > limit.min(MAX_PALETTE) {
        return Err(Error::GuardExceeded {
            what: "vertex plus edge count",
            actual: items,
            limit: limit.min(MAX_PALETTE),
        });
    }
    let mut conflict = vec![0u128; items];
    let mut link = |a: usize, b: usize| {
        conflict[a] |= 1 << b;
        conflict[b] |= 1 << a;
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        link(u, v);
        link(u, n + e);
        link(v, n + e);
    }
    for v in 0..n {
        let inc = g.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                link(n + e, n + f);
            }
        }
    }
    let all = if items == 128 { u128::MAX } else { (1u128 << items) - 1 };
    let mut best = 0;
    independent_set(&conflict, all, 0, &mut best);
    Ok(best)
}

/// Maximum independent set over the vertices in `open`.
pub(crate) fn independent_set(conflict: &[u128], mut open: u128, size: usize, best: &mut usize) {
    // isolated elements can always be taken
    let mut size = size;
    loop {
        let mut took = false;
        let mut rest = open;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if conflict[x] & open == 0 {
                open &= !(1 << x);
                size += 1;
                took = true;
            }
        }
        if !took {
            break;
        }
    }
    if open == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + open.count_ones() as usize <= *best {
        return;
    }
    let mut pick = 0;
    let mut pick_deg = 0;
    let mut rest = open;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (conflict[x] & open).count_ones();
        if d > pick_deg {
            pick = x;
            pick_deg = d;
        }
    }
    // with degree at most two only paths and cycles are left
    if pick_deg <= 2 {
        *best = (*best).max(size + paths_and_cycles(conflict, open));
        return;
    }
    independent_set(conflict, open & !(1 << pick) & !conflict[pick], size + 1, best);
    independent_set(conflict, open & !(1 << pick), size, best);
}

/// Independence number of a graph with maximum degree two.
fn paths_and_cycles(conflict: &[u128], open: u128) -> usize {
    let mut left = open;
    let mut total = 0;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = 1u128 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = conflict[x] & open & !comp;
            comp |= new;
            frontier |= new;
        }
        left &= !comp;
        let k = comp.count_ones() as usize;
        let mut edge_ends = 0;
        let mut c = comp;
        while c != 0 {
            let x = c.trailing_zeros() as usize;
            c &= c - 1;
            edge_ends += (conflict[x] & comp).count_ones() as usize;
        }
        let is_cycle = edge_ends == 2 * k && k >= 3;
        total += if is_cycle { k / 2 } else { k.div_ceil(2) };
    }
    total
}

/// Largest independent vertex set of `g`.
pub fn independence_number(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > MAX_PALETTE {
        return Err(Error::GuardExceeded {
            what: "vertex count",
            actual: n,
            limit: MAX_PALETTE,
        });
    }
    let mut conflict = vec![0u128; n];
    for &(u, v) in g.edges() {
        conflict[u] |= 1 << v;
        conflict[v] |= 1 << u;
    }
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = 0;
    independent_set(&conflict, all, 0, &mut best);
    Ok(best)
}
