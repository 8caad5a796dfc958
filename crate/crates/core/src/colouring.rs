//! Edge colourings under construction, total colourings, and brute-force
//! checkers that share no state with the solver.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::lists::{Color, ListAssignment, TotalListAssignment};

/// A proper partial edge colouring. Every vertex indexes its colours so that
/// "which edge at `v` has colour `c`" is a hash lookup.
#[derive(Debug, Clone)]
pub struct PartialEdgeColoring {
    colours: Vec<Option<Color>>,
    at: Vec<HashMap<Color, EdgeId>>,
}

impl PartialEq for PartialEdgeColoring {
    fn eq(&self, other: &Self) -> bool {
        self.colours == other.colours
    }
}

impl PartialEdgeColoring {
    pub fn new(g: &Graph) -> Self {
        PartialEdgeColoring {
            colours: vec![None; g.edge_count()],
            at: vec![HashMap::new(); g.vertex_count()],
        }
    }

    /// Rebuilds the index from a flat colour array, rejecting clashes.
    pub fn from_colours(g: &Graph, colours: &[Option<Color>]) -> Result<Self> {
        if colours.len() != g.edge_count() {
            return Err(Error::InvalidInput(format!(
                "{} colours for {} edges",
                colours.len(),
                g.edge_count()
            )));
        }
        let mut col = PartialEdgeColoring::new(g);
        for (e, c) in colours.iter().enumerate() {
            if let Some(c) = *c {
                col.assign(g, e, c)?;
            }
        }
        Ok(col)
    }

    pub fn colour(&self, e: EdgeId) -> Option<Color> {
        self.colours[e]
    }

    pub fn colours(&self) -> &[Option<Color>] {
        &self.colours
    }

    pub fn coloured_count(&self) -> usize {
        self.colours.iter().filter(|c| c.is_some()).count()
    }

    pub fn coloured_degree(&self, v: Vertex) -> usize {
        self.at[v].len()
    }

    /// The edge at `v` carrying colour `c`.
    pub fn edge_at(&self, v: Vertex, c: Color) -> Option<EdgeId> {
        self.at[v].get(&c).copied()
    }

    pub fn is_missing(&self, v: Vertex, c: Color) -> bool {
        !self.at[v].contains_key(&c)
    }

    /// Colours edge `e`, failing if either endpoint already sees `c` on
    /// another edge.
    pub fn assign(&mut self, g: &Graph, e: EdgeId, c: Color) -> Result<()> {
        self.clear(g, e);
        let (u, v) = g.endpoints(e);
        for w in [u, v] {
            if let Some(f) = self.edge_at(w, c) {
                return Err(Error::Invariant(format!(
                    "colour {c} on edge {e} clashes with edge {f} at vertex {w}"
                )));
            }
        }
        self.at[u].insert(c, e);
        self.at[v].insert(c, e);
        self.colours[e] = Some(c);
        Ok(())
    }

    pub fn clear(&mut self, g: &Graph, e: EdgeId) {
        if let Some(old) = self.colours[e].take() {
            let (u, v) = g.endpoints(e);
            self.at[u].remove(&old);
            self.at[v].remove(&old);
        }
    }

    /// Recolours several edges at once; all are cleared before any is
    /// assigned, so permutations of colours along a path are allowed.
    pub fn recolour_all(&mut self, g: &Graph, changes: &[(EdgeId, Color)]) -> Result<()> {
        for &(e, _) in changes {
            self.clear(g, e);
        }
        for &(e, c) in changes {
            self.assign(g, e, c)?;
        }
        Ok(())
    }

    /// Flat colour vector; `None` if any edge is uncoloured.
    pub fn complete(&self) -> Option<Vec<Color>> {
        self.colours.iter().copied().collect()
    }
}

/// A colour for every vertex and every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalColoring {
    pub vertex_colours: Vec<Color>,
    pub edge_colours: Vec<Color>,
}

impl TotalColoring {
    pub fn distinct_colours(&self) -> usize {
        let mut all: Vec<Color> = self
            .vertex_colours
            .iter()
            .chain(&self.edge_colours)
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }
}

/// First violated clause found by a checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongLength { expected: usize, found: usize },
    Uncoloured { edge: EdgeId },
    EdgeNotInList { edge: EdgeId, colour: Color },
    VertexNotInList { vertex: Vertex, colour: Color },
    IncidentEdges { vertex: Vertex, edges: (EdgeId, EdgeId), colour: Color },
    AdjacentVertices { edge: EdgeId, vertices: (Vertex, Vertex), colour: Color },
    VertexEdge { vertex: Vertex, edge: EdgeId, colour: Color },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, found } => {
                write!(f, "expected {expected} colours, found {found}")
            }
            Violation::Uncoloured { edge } => write!(f, "edge {edge} is uncoloured"),
            Violation::EdgeNotInList { edge, colour } => {
                write!(f, "edge {edge} has colour {colour}, which is not in its list")
            }
            Violation::VertexNotInList { vertex, colour } => {
                write!(f, "vertex {vertex} has colour {colour}, which is not in its list")
            }
            Violation::IncidentEdges { vertex, edges, colour } => write!(
                f,
                "edges {} and {} meet at vertex {vertex} and share colour {colour}",
                edges.0, edges.1
            ),
            Violation::AdjacentVertices { edge, vertices, colour } => write!(
                f,
                "adjacent vertices {} and {} (edge {edge}) share colour {colour}",
                vertices.0, vertices.1
            ),
            Violation::VertexEdge { vertex, edge, colour } => write!(
                f,
                "vertex {vertex} and incident edge {edge} share colour {colour}"
            ),
        }
    }
}

/// Verifies a complete proper L-edge-colouring by pairwise comparison at
/// every vertex.
pub fn check_edge_colouring(
    g: &Graph,
    lists: &ListAssignment,
    colours: &[Option<Color>],
) -> std::result::Result<(), Violation> {
    if colours.len() != g.edge_count() {
        return Err(Violation::WrongLength {
            expected: g.edge_count(),
            found: colours.len(),
        });
    }
    for (e, c) in colours.iter().enumerate() {
        let c = c.ok_or(Violation::Uncoloured { edge: e })?;
        if !lists.list(e).contains(c) {
            return Err(Violation::EdgeNotInList { edge: e, colour: c });
        }
    }
    check_partial_properness(g, colours)
}

/// Incident-edge properness only; uncoloured edges are ignored.
pub fn check_partial_properness(
    g: &Graph,
    colours: &[Option<Color>],
) -> std::result::Result<(), Violation> {
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                if let (Some(a), Some(b)) = (colours[e], colours[f]) {
                    if a == b {
                        return Err(Violation::IncidentEdges {
                            vertex: v,
                            edges: (e.min(f), e.max(f)),
                            colour: a,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Verifies all four clauses of a proper total list colouring.
pub fn check_total_colouring(
    g: &Graph,
    lists: &TotalListAssignment,
    tc: &TotalColoring,
) -> std::result::Result<(), Violation> {
    if tc.vertex_colours.len() != g.vertex_count() {
        return Err(Violation::WrongLength {
            expected: g.vertex_count(),
            found: tc.vertex_colours.len(),
        });
    }
    for (v, &c) in tc.vertex_colours.iter().enumerate() {
        if !lists.vertex_list(v).contains(c) {
            return Err(Violation::VertexNotInList { vertex: v, colour: c });
        }
    }
    let edge_colours: Vec<Option<Color>> = tc.edge_colours.iter().copied().map(Some).collect();
    check_edge_colouring(g, &lists.edges, &edge_colours)?;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tc.vertex_colours[u] == tc.vertex_colours[v] {
            return Err(Violation::AdjacentVertices {
                edge: e,
                vertices: (u, v),
                colour: tc.vertex_colours[u],
            });
        }
        for w in [u, v] {
            if tc.vertex_colours[w] == tc.edge_colours[e] {
                return Err(Violation::VertexEdge {
                    vertex: w,
                    edge: e,
                    colour: tc.edge_colours[e],
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};
    use crate::lists::uniform_lists;

    #[test]
    fn index_follows_assignments() {
        let p = generate(GraphKind::Path(3)).unwrap();
        let mut col = PartialEdgeColoring::new(&p);
        col.assign(&p, 0, 4).unwrap();
        assert_eq!(col.edge_at(1, 4), Some(0));
        assert!(col.assign(&p, 1, 4).is_err());
        col.recolour_all(&p, &[(0, 5), (1, 4)]).unwrap();
        assert_eq!(col.edge_at(1, 4), Some(1));
        assert_eq!(col.edge_at(0, 5), Some(0));
        assert!(col.is_missing(0, 4));
    }

    #[test]
    fn edge_checker_catches_clash_and_list() {
        let k3 = generate(GraphKind::Complete(3)).unwrap();
        let l = uniform_lists(&k3, 3);
        assert_eq!(check_edge_colouring(&k3, &l, &[Some(0), Some(1), Some(2)]), Ok(()));
        assert!(matches!(
            check_edge_colouring(&k3, &l, &[Some(0), Some(0), Some(2)]),
            Err(Violation::IncidentEdges { vertex: 0, colour: 0, .. })
        ));
        assert!(matches!(
            check_edge_colouring(&k3, &l, &[Some(0), Some(1), Some(7)]),
            Err(Violation::EdgeNotInList { edge: 2, .. })
        ));
        assert!(matches!(
            check_edge_colouring(&k3, &l, &[Some(0), None, Some(2)]),
            Err(Violation::Uncoloured { edge: 1 })
        ));
    }

    #[test]
    fn total_checker_clauses() {
        let e = Graph::new(2, vec![(0, 1)]).unwrap();
        let l = TotalListAssignment::uniform(&e, 5);
        let ok = TotalColoring {
            vertex_colours: vec![0, 1],
            edge_colours: vec![2],
        };
        assert_eq!(check_total_colouring(&e, &l, &ok), Ok(()));
        let same_vertices = TotalColoring {
            vertex_colours: vec![0, 0],
            edge_colours: vec![2],
        };
        assert!(matches!(
            check_total_colouring(&e, &l, &same_vertices),
            Err(Violation::AdjacentVertices { .. })
        ));
        let vertex_edge = TotalColoring {
            vertex_colours: vec![0, 1],
            edge_colours: vec![1],
        };
        assert!(matches!(
            check_total_colouring(&e, &l, &vertex_edge),
            Err(Violation::VertexEdge { vertex: 1, .. })
        ));
    }
}
