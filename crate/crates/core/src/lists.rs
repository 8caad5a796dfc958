//! Edge and total list assignments, and the list generators used by the
//! solver and the total-colouring reductions.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

pub type Color = u32;

/// A finite, duplicate-free colour set kept in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Color>", into = "Vec<Color>")]
pub struct ColorSet(Vec<Color>);

impl ColorSet {
    pub fn new(mut colours: Vec<Color>) -> Self {
        colours.sort_unstable();
        colours.dedup();
        ColorSet(colours)
    }

    /// `{0, .., k-1}`.
    pub fn range(k: usize) -> Self {
        ColorSet((0..k as Color).collect())
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn without(&self, removed: &[Color]) -> ColorSet {
        ColorSet(self.iter().filter(|c| !removed.contains(c)).collect())
    }
}

impl From<Vec<Color>> for ColorSet {
    fn from(v: Vec<Color>) -> Self {
        ColorSet::new(v)
    }
}

impl From<ColorSet> for Vec<Color> {
    fn from(s: ColorSet) -> Self {
        s.0
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorSet::new(iter.into_iter().collect())
    }
}

/// `L(e)` for every edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(g: &Graph, lists: Vec<ColorSet>) -> Result<Self> {
        if lists.len() != g.edge_count() {
            return Err(Error::InvalidInput(format!(
                "{} edge lists for a graph with {} edges",
                lists.len(),
                g.edge_count()
            )));
        }
        Ok(ListAssignment { lists })
    }

    pub fn list(&self, e: EdgeId) -> &ColorSet {
        &self.lists[e]
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn min_size(&self) -> Option<usize> {
        self.lists.iter().map(ColorSet::len).min()
    }

    /// Union of every list, ascending.
    pub fn palette(&self) -> Vec<Color> {
        let mut all: Vec<Color> = self.lists.iter().flat_map(|l| l.iter()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// `Λ(e)` for every edge and `Λ(v)` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalListAssignment {
    pub edges: ListAssignment,
    vertex_lists: Vec<ColorSet>,
}

impl TotalListAssignment {
    pub fn new(g: &Graph, edge_lists: Vec<ColorSet>, vertex_lists: Vec<ColorSet>) -> Result<Self> {
        if vertex_lists.len() != g.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "{} vertex lists for a graph with {} vertices",
                vertex_lists.len(),
                g.vertex_count()
            )));
        }
        Ok(TotalListAssignment {
            edges: ListAssignment::new(g, edge_lists)?,
            vertex_lists,
        })
    }

    /// Every vertex and edge receives `{0, .., k-1}`.
    pub fn uniform(g: &Graph, k: usize) -> Self {
        TotalListAssignment {
            edges: uniform_lists(g, k),
            vertex_lists: vec![ColorSet::range(k); g.vertex_count()],
        }
    }

    pub fn edge_list(&self, e: EdgeId) -> &ColorSet {
        self.edges.list(e)
    }

    pub fn vertex_list(&self, v: Vertex) -> &ColorSet {
        &self.vertex_lists[v]
    }

    pub fn vertex_lists(&self) -> &[ColorSet] {
        &self.vertex_lists
    }
}

/// Every edge gets `{0, .., k-1}`.
pub fn uniform_lists(g: &Graph, k: usize) -> ListAssignment {
    ListAssignment {
        lists: vec![ColorSet::range(k); g.edge_count()],
    }
}

/// Each edge gets a uniformly random `k`-subset of `{0, .., palette_size-1}`.
pub fn random_lists(g: &Graph, k: usize, palette_size: usize, seed: u64) -> Result<ListAssignment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(ListAssignment {
        lists: random_sets(&mut rng, g.edge_count(), k, palette_size)?,
    })
}

/// Random total lists: every vertex and edge gets a random `k`-subset of the
/// palette. Vertices are drawn first, then edges.
pub fn random_total_lists(
    g: &Graph,
    k: usize,
    palette_size: usize,
    seed: u64,
) -> Result<TotalListAssignment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertex_lists = random_sets(&mut rng, g.vertex_count(), k, palette_size)?;
    let edge_lists = random_sets(&mut rng, g.edge_count(), k, palette_size)?;
    TotalListAssignment::new(g, edge_lists, vertex_lists)
}

fn random_sets(
    rng: &mut ChaCha8Rng,
    count: usize,
    k: usize,
    palette_size: usize,
) -> Result<Vec<ColorSet>> {
    if palette_size < k {
        return Err(Error::InvalidInput(format!(
            "palette of {palette_size} colours cannot supply lists of size {k}"
        )));
    }
    Ok((0..count)
        .map(|_| {
            index::sample(rng, palette_size, k)
                .into_iter()
                .map(|c| c as Color)
                .collect()
        })
        .collect())
}

/// `Λ(e)` minus the colours of the two endpoints of `e`.
pub fn residual_edge_lists(
    g: &Graph,
    lists: &TotalListAssignment,
    vertex_colours: &[Color],
) -> Result<ListAssignment> {
    if vertex_colours.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "vertex colouring covers {} of {} vertices",
            vertex_colours.len(),
            g.vertex_count()
        )));
    }
    for (v, &c) in vertex_colours.iter().enumerate() {
        if !lists.vertex_list(v).contains(c) {
            return Err(Error::InvalidInput(format!(
                "vertex {v} coloured {c}, which is not in its list"
            )));
        }
    }
    let residual = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| lists.edge_list(e).without(&[vertex_colours[u], vertex_colours[v]]))
        .collect();
    ListAssignment::new(g, residual)
}

/// Colours vertices in id order, each with the lowest colour of its list not
/// used by an already coloured neighbour.
pub fn greedy_vertex_colouring(g: &Graph, lists: &[ColorSet]) -> Result<Vec<Color>> {
    if lists.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "{} vertex lists for {} vertices",
            lists.len(),
            g.vertex_count()
        )));
    }
    let mut colour: Vec<Option<Color>> = vec![None; g.vertex_count()];
    for v in 0..g.vertex_count() {
        let taken: Vec<Color> = g.neighbours(v).filter_map(|w| colour[w]).collect();
        let pick = lists[v]
            .iter()
            .find(|c| !taken.contains(c))
            .ok_or(Error::GreedyStuck { vertex: v })?;
        colour[v] = Some(pick);
    }
    let colour: Vec<Color> = colour.into_iter().map(Option::unwrap).collect();

    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if colour[u] == colour[v] {
            return Err(Error::Invariant(format!(
                "greedy colouring gives both ends of edge {e} colour {}",
                colour[u]
            )));
        }
    }
    for (v, &c) in colour.iter().enumerate() {
        if !lists[v].contains(c) {
            return Err(Error::Invariant(format!("vertex {v} coloured outside its list")));
        }
    }
    Ok(colour)
}

/// JSON form of a list assignment; `vertex_lists` is present for total lists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ListsFile {
    pub edge_lists: Vec<Vec<Color>>,
    pub vertex_lists: Option<Vec<Vec<Color>>>,
}

impl ListsFile {
    pub fn from_edge_lists(lists: &ListAssignment) -> Self {
        ListsFile {
            edge_lists: lists.lists().iter().map(|l| l.as_slice().to_vec()).collect(),
            vertex_lists: None,
        }
    }

    pub fn from_total(lists: &TotalListAssignment) -> Self {
        ListsFile {
            vertex_lists: Some(
                lists
                    .vertex_lists()
                    .iter()
                    .map(|l| l.as_slice().to_vec())
                    .collect(),
            ),
            ..ListsFile::from_edge_lists(&lists.edges)
        }
    }

    pub fn edge_assignment(&self, g: &Graph) -> Result<ListAssignment> {
        ListAssignment::new(g, self.edge_lists.iter().cloned().map(ColorSet::new).collect())
    }

    pub fn total_assignment(&self, g: &Graph) -> Result<TotalListAssignment> {
        let vertex_lists = self
            .vertex_lists
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("lists file has no vertex_lists".into()))?;
        TotalListAssignment::new(
            g,
            self.edge_lists.iter().cloned().map(ColorSet::new).collect(),
            vertex_lists.iter().cloned().map(ColorSet::new).collect(),
        )
    }
}
