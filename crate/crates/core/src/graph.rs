//! Immutable simple graphs with stable edge ids.
//!
//! Vertices are `0..n`; edge `e` is the `e`-th pair in insertion order. Each
//! vertex keeps its incident edge ids and an endpoint-pair index answers
//! "is there an edge `{u, v}`" in O(1).

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {id} = {{{u}, {v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {id} is a loop at {u}")));
            }
            if let Some(prev) = index.insert(key(u, v), id) {
                return Err(Error::InvalidGraph(format!(
                    "edge {id} = {{{u}, {v}}} duplicates edge {prev}"
                )));
            }
            incidence[u].push(id);
            incidence[v].push(id);
        }
        Ok(Graph {
            n,
            edges,
            incidence,
            index,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, Vec::new()).expect("edgeless graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        debug_assert!(a == v || b == v, "vertex {v} not on edge {e}");
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incidence[v].iter().map(move |&e| self.opposite(e, v))
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&key(u, v)).copied()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Maximum degree, 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Subgraph induced by `vs`, relabelled to `0..vs.len()` in the order the
    /// vertices are given. The second component maps new edge ids to the
    /// original ones.
    pub fn induced_subgraph(&self, vs: &[Vertex]) -> Result<(Graph, Vec<EdgeId>)> {
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} outside 0..{}",
                    self.n
                )));
            }
            if relabel[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
            }
            relabel[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if relabel[u] != usize::MAX && relabel[v] != usize::MAX {
                edges.push((relabel[u], relabel[v]));
                origin.push(id);
            }
        }
        Ok((Graph::new(vs.len(), edges)?, origin))
    }

    /// Same vertex set, keeping only the edges for which `keep` holds.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(EdgeId) -> bool) -> Graph {
        let edges = (0..self.edge_count())
            .filter(|&e| keep(e))
            .map(|e| self.edges[e])
            .collect();
        Graph::new(self.n, edges).expect("subgraph of a simple graph is simple")
    }

    pub fn without_edge(&self, e: EdgeId) -> Graph {
        self.spanning_subgraph(|f| f != e)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// A proper 2-colouring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for w in self.neighbours(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edge-list text: `n m` then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.edges.len()).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses the edge-list format. Lines starting with `#` and blank lines
    /// are skipped; errors carry the 1-based line number.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        let mut seen: HashMap<(Vertex, Vertex), usize> = HashMap::with_capacity(m);
        for (line, text) in lines {
            let (u, v) = parse_pair(line, text)?;
            let fail = |message: String| Error::Parse { line, message };
            if edges.len() == m {
                return Err(fail(format!("more than the {m} declared edges")));
            }
            if u >= n || v >= n {
                return Err(fail(format!("endpoint out of range 0..{n}")));
            }
            if u == v {
                return Err(fail(format!("loop at vertex {u}")));
            }
            if let Some(prev) = seen.insert(key(u, v), line) {
                return Err(fail(format!("duplicate of the edge on line {prev}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let fail = |message: &str| Error::Parse {
        line,
        message: message.to_string(),
    };
    let mut parts = text.split_whitespace();
    let a = parts.next().ok_or_else(|| fail("expected two integers"))?;
    let b = parts.next().ok_or_else(|| fail("expected two integers"))?;
    if parts.next().is_some() {
        return Err(fail("trailing tokens"));
    }
    let a = a.parse().map_err(|_| fail("not a nonnegative integer"))?;
    let b = b.parse().map_err(|_| fail("not a nonnegative integer"))?;
    Ok((a, b))
}
