//! Hall's edge and total conditions for list assignments, and the smallest
//! uniform list sizes that satisfy them, computed two ways: as a maximum
//! ratio over substructures, and directly from the conditions.
//!
//! Both conditions are Hall's condition for vertex list colouring of a
//! conflict graph whose items are the edges (the line graph) or the
//! vertices and edges (the total graph). A substructure is any set of
//! items, with the conflicts among them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::lists::{uniform_lists, Color, ColorSet, ListAssignment, TotalListAssignment};
use crate::oracle::independent_set;

/// Size limits for each enumeration. The two max-ratio routes are limited
/// by vertex count, the condition checks and list routes by item count
/// (edges, or vertices plus edges).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HallGuards {
    pub edge_check: usize,
    pub edge_index: usize,
    pub edge_index_lists: usize,
    pub total_check: usize,
    pub total_index: usize,
    pub total_index_lists: usize,
}

impl Default for HallGuards {
    fn default() -> Self {
        HallGuards {
            edge_check: 24,
            edge_index: 16,
            edge_index_lists: 24,
            total_check: 24,
            total_index: 12,
            total_index_lists: 24,
        }
    }
}

/// The independence table has `2^items` entries.
const TABLE_LIMIT: usize = 26;

/// A maximum-ratio value with the substructure that attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallReport {
    pub value: usize,
    /// For the edge index, every endpoint of `witness_edges`; for the total
    /// number, the vertices that belong to the substructure.
    pub witness: Vec<Vertex>,
    pub witness_edges: Vec<EdgeId>,
    pub numerator: usize,
    pub denominator: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HallCheck {
    Satisfied,
    /// `size` items in the witness but only `capacity` colour slots.
    Violated {
        witness: Vec<Vertex>,
        witness_edges: Vec<EdgeId>,
        size: usize,
        capacity: usize,
    },
}

impl HallCheck {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, HallCheck::Satisfied)
    }
}

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::GuardExceeded { what, actual, limit });
    }
    Ok(())
}

/// Items and their conflicts. In the total case items `0..offset` are the
/// vertices and `offset..` the edges; in the edge case `offset` is 0.
struct Items<'a> {
    g: &'a Graph,
    conflict: Vec<u128>,
    offset: usize,
}

impl<'a> Items<'a> {
    fn edges(g: &'a Graph) -> Result<Self> {
        guard("edge count", g.edge_count(), 128)?;
        let mut conflict = vec![0u128; g.edge_count()];
        for v in 0..g.vertex_count() {
            let inc = g.incident(v);
            for (i, &e) in inc.iter().enumerate() {
                for &f in &inc[i + 1..] {
                    conflict[e] |= 1 << f;
                    conflict[f] |= 1 << e;
                }
            }
        }
        Ok(Items { g, conflict, offset: 0 })
    }

    fn total(g: &'a Graph) -> Result<Self> {
        Ok(Items {
            g,
            conflict: total_conflicts(g)?,
            offset: g.vertex_count(),
        })
    }

    fn len(&self) -> usize {
        self.conflict.len()
    }

    fn all(&self) -> u128 {
        match self.len() {
            128 => u128::MAX,
            k => (1u128 << k) - 1,
        }
    }

    fn alpha(&self, set: u128) -> usize {
        let mut best = 0;
        independent_set(&self.conflict, set, 0, &mut best);
        best
    }

    fn neighbours(&self, set: u128) -> u128 {
        bits(set).fold(0, |acc, x| acc | self.conflict[x])
    }

    fn is_connected(&self, set: u128) -> bool {
        if set == 0 {
            return false;
        }
        let mut seen = 1u128 << set.trailing_zeros();
        loop {
            let grown = seen | (self.neighbours(seen) & set);
            if grown == seen {
                return seen == set;
            }
            seen = grown;
        }
    }

    fn report(&self, set: u128, numerator: usize, denominator: usize) -> HallReport {
        let (witness, witness_edges) = self.split(set);
        HallReport {
            value: numerator.div_ceil(denominator.max(1)),
            witness,
            witness_edges,
            numerator,
            denominator,
        }
    }

    fn split(&self, set: u128) -> (Vec<Vertex>, Vec<EdgeId>) {
        let edges: Vec<EdgeId> = bits(set).filter(|&x| x >= self.offset).map(|x| x - self.offset).collect();
        let mut vertices: Vec<Vertex> = bits(set).filter(|&x| x < self.offset).collect();
        if self.offset == 0 {
            for &e in &edges {
                let (u, v) = self.g.endpoints(e);
                vertices.extend([u, v]);
            }
            vertices.sort_unstable();
            vertices.dedup();
        }
        (vertices, edges)
    }

    /// Colours grouped by the set of items whose lists hold them; colours
    /// with the same holders contribute identically.
    fn classes<'l>(&self, list_of: impl Fn(usize) -> &'l ColorSet) -> Vec<(u128, usize)> {
        let mut palette: Vec<Color> = (0..self.len()).flat_map(|x| list_of(x).iter()).collect();
        palette.sort_unstable();
        palette.dedup();
        let mut classes: Vec<(u128, usize)> = Vec::new();
        for s in palette {
            let holders = (0..self.len())
                .filter(|&x| list_of(x).contains(s))
                .fold(0u128, |acc, x| acc | 1 << x);
            match classes.iter_mut().find(|(h, _)| *h == holders) {
                Some((_, count)) => *count += 1,
                None => classes.push((holders, 1)),
            }
        }
        classes
    }

    /// Independence number of every item subset, by the recurrence
    /// `a(S) = max(a(S - x), 1 + a(S - N[x]))` on the lowest item `x`.
    fn independence_table(&self) -> Vec<u8> {
        let k = self.len();
        debug_assert!(k <= TABLE_LIMIT);
        let mut table = vec![0u8; 1 << k];
        for set in 1usize..(1 << k) {
            let x = set.trailing_zeros() as usize;
            let rest = set & !(1 << x);
            let without = table[rest];
            let with = 1 + table[rest & !(self.conflict[x] as usize)];
            table[set] = without.max(with);
        }
        table
    }

    /// Scans every item subset in increasing bitmask order. Returns the
    /// violation with the largest deficit (earliest on ties), or the first
    /// one found when `first` is set.
    fn check(&self, classes: &[(u128, usize)], first: bool) -> HallCheck {
        let table = self.independence_table();
        let mut worst: Option<(usize, usize, usize)> = None;
        for set in 1usize..(1 << self.len()) {
            let size = set.count_ones() as usize;
            let mut capacity = 0;
            for &(holders, count) in classes {
                capacity += count * table[set & holders as usize] as usize;
                if capacity >= size {
                    break;
                }
            }
            if size > capacity && worst.map_or(true, |(_, s, c)| size - capacity > s - c) {
                worst = Some((set, size, capacity));
                if first {
                    break;
                }
            }
        }
        match worst {
            None => HallCheck::Satisfied,
            Some((set, size, capacity)) => {
                let (witness, witness_edges) = self.split(set as u128);
                HallCheck::Violated {
                    witness,
                    witness_edges,
                    size,
                    capacity,
                }
            }
        }
    }

    /// Cliques worth trying before the search: a vertex with all its edges
    /// (just the edges in the edge case), and a greedy clique through each
    /// item.
    fn seed_cliques(&self) -> Vec<u128> {
        let mut out = Vec::new();
        for v in 0..self.g.vertex_count() {
            let mut c = self.g.incident(v).iter().fold(0u128, |acc, &e| acc | 1 << (self.offset + e));
            if self.offset > 0 {
                c |= 1 << v;
            }
            out.push(c);
        }
        for x in 0..self.len() {
            let mut clique = 1u128 << x;
            let mut open = self.conflict[x];
            while open != 0 {
                let y = open.trailing_zeros() as usize;
                clique |= 1 << y;
                open &= self.conflict[y] & !(1u128 << y);
            }
            out.push(clique);
        }
        out
    }

    /// Maximum over nonempty item sets `S` (connected ones only, if asked)
    /// of `ceil(|S| / independence number of S)`. The whole item set is the
    /// starting answer when allowed, and is replaced only by strictly larger
    /// values.
    fn max_ratio(&self, connected_only: bool) -> HallReport {
        let k = self.len();
        if k == 0 {
            return empty_report();
        }
        let all = self.all();
        let whole_alpha = self.alpha(all);
        let mut best = if !connected_only || self.is_connected(all) {
            self.report(all, k, whole_alpha)
        } else {
            empty_report()
        };
        for c in self.seed_cliques() {
            let size = c.count_ones() as usize;
            if size > best.value {
                best = self.report(c, size, 1);
            }
        }
        let classes = colour_classes(&self.conflict);
        for bound in 1..=whole_alpha {
            if classes.len() <= best.value {
                break;
            }
            let mut search = RatioSearch {
                items: self,
                classes: &classes,
                k: bound,
                best: &mut best,
            };
            if connected_only {
                for root in 0..k {
                    let above = all & !(u128::MAX >> (127 - root));
                    search.connected(1 << root, 1, above);
                }
            } else {
                search.any(0, 0, all);
            }
        }
        best
    }
}

fn bits(set: u128) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(x)
    })
}

fn empty_report() -> HallReport {
    HallReport {
        value: 0,
        witness: Vec::new(),
        witness_edges: Vec::new(),
        numerator: 0,
        denominator: 1,
    }
}

/// Greedy proper colouring of a conflict graph, largest degree first.
fn colour_classes(conflict: &[u128]) -> Vec<u128> {
    let mut order: Vec<usize> = (0..conflict.len()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(conflict[x].count_ones()));
    let mut classes: Vec<u128> = Vec::new();
    for x in order {
        match classes.iter_mut().find(|c| **c & conflict[x] == 0) {
            Some(c) => *c |= 1 << x,
            None => classes.push(1 << x),
        }
    }
    classes
}

/// Branch and bound for a set with independence number at most `k` and
/// more than `best * k` items. A set with independence number at most `k`
/// meets each colour class in at most `k` items, which caps the reachable
/// size.
struct RatioSearch<'a, 'g> {
    items: &'a Items<'g>,
    classes: &'a [u128],
    k: usize,
    best: &'a mut HallReport,
}

impl RatioSearch<'_, '_> {
    fn need(&self) -> usize {
        self.best.value * self.k + 1
    }

    fn reach(&self, avail: u128) -> usize {
        self.classes
            .iter()
            .map(|&c| (avail & c).count_ones().min(self.k as u32) as usize)
            .sum()
    }

    fn record(&mut self, set: u128, set_alpha: usize) {
        let size = set.count_ones() as usize;
        if size >= self.need() {
            *self.best = self.items.report(set, size, set_alpha);
        }
    }

    /// Every subset of `set | open` containing `set`.
    fn any(&mut self, set: u128, set_alpha: usize, open: u128) {
        self.record(set, set_alpha);
        if open == 0 || self.reach(set | open) < self.need() {
            return;
        }
        let x = open.trailing_zeros();
        let rest = open & !(1u128 << x);
        let with = set | 1 << x;
        let with_alpha = self.items.alpha(with);
        if with_alpha <= self.k {
            self.any(with, with_alpha, rest);
        }
        self.any(set, set_alpha, rest);
    }

    /// Connected sets containing `set` (itself connected) grown through
    /// items of `allowed`.
    fn connected(&mut self, set: u128, set_alpha: usize, allowed: u128) {
        self.record(set, set_alpha);
        let mut reachable = set;
        loop {
            let grown = reachable | (self.items.neighbours(reachable) & allowed);
            if grown == reachable {
                break;
            }
            reachable = grown;
        }
        if reachable == set || self.reach(reachable) < self.need() {
            return;
        }
        let frontier = self.items.neighbours(set) & allowed;
        let x = frontier.trailing_zeros();
        let rest = allowed & !(1u128 << x);
        let with = set | 1 << x;
        let with_alpha = self.items.alpha(with);
        if with_alpha <= self.k {
            self.connected(with, with_alpha, rest);
        }
        self.connected(set, set_alpha, rest);
    }
}

/// Hall's edge-condition: every set `S` of edges has `|S| <= sum over
/// colours s of the matching number of the edges of S whose lists contain
/// s`. Of all violating edge sets, one with the largest deficit is returned.
pub fn check_hall_edge_condition(g: &Graph, lists: &ListAssignment) -> Result<HallCheck> {
    check_hall_edge_condition_guarded(g, lists, HallGuards::default().edge_check)
}

/// `limit` bounds the edge count.
pub fn check_hall_edge_condition_guarded(g: &Graph, lists: &ListAssignment, limit: usize) -> Result<HallCheck> {
    edge_check(g, lists, limit, false)
}

fn edge_check(g: &Graph, lists: &ListAssignment, limit: usize, first: bool) -> Result<HallCheck> {
    guard("edge count for the edge condition", g.edge_count(), limit.min(TABLE_LIMIT))?;
    if lists.len() != g.edge_count() {
        return Err(Error::InvalidInput(format!("{} lists for {} edges", lists.len(), g.edge_count())));
    }
    let items = Items::edges(g)?;
    Ok(items.check(&items.classes(|e| lists.list(e)), first))
}

/// Maximum over connected edge sets `H` of `ceil(|H| / matching number of H)`.
pub fn hall_condition_index(g: &Graph) -> Result<HallReport> {
    hall_condition_index_guarded(g, HallGuards::default().edge_index, true)
}

/// As `hall_condition_index`, optionally over all edge sets. A disconnected
/// set never beats its best component: the sum of the numerators over the
/// sum of the denominators is at most the largest ratio.
pub fn hall_condition_index_guarded(g: &Graph, limit: usize, connected_only: bool) -> Result<HallReport> {
    guard("vertex count for the edge index", g.vertex_count(), limit)?;
    Ok(Items::edges(g)?.max_ratio(connected_only))
}

/// Smallest `l` such that giving every edge `{0, .., l-1}` satisfies Hall's
/// edge-condition.
pub fn hall_condition_index_via_lists(g: &Graph) -> Result<usize> {
    hall_condition_index_via_lists_guarded(g, HallGuards::default().edge_index_lists)
}

/// `limit` bounds the edge count.
pub fn hall_condition_index_via_lists_guarded(g: &Graph, limit: usize) -> Result<usize> {
    let mut l = 0;
    loop {
        if edge_check(g, &uniform_lists(g, l), limit, true)?.is_satisfied() {
            return Ok(l);
        }
        l += 1;
    }
}

/// The total graph of `g`: items `0..n` are the vertices, `n..n+m` the
/// edges, and two items conflict when they are adjacent or incident.
pub fn total_conflicts(g: &Graph) -> Result<Vec<u128>> {
    let n = g.vertex_count();
    let items = n + g.edge_count();
    guard("vertex plus edge count", items, 128)?;
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
    Ok(conflict)
}

/// Hall's total condition: every set `S` of vertices and edges has
/// `|S| <= sum over colours s of the total independence number of the
/// members of S whose lists contain s`. Of all violating sets, one with the
/// largest deficit is returned (vertices are the low bits, then edges, and
/// ties go to the smaller bitmask).
pub fn check_hall_total_condition(g: &Graph, lists: &TotalListAssignment) -> Result<HallCheck> {
    check_hall_total_condition_guarded(g, lists, HallGuards::default().total_check)
}

/// `limit` bounds the number of vertices plus edges.
pub fn check_hall_total_condition_guarded(
    g: &Graph,
    lists: &TotalListAssignment,
    limit: usize,
) -> Result<HallCheck> {
    total_check(g, lists, limit, false)
}

fn total_check(g: &Graph, lists: &TotalListAssignment, limit: usize, first: bool) -> Result<HallCheck> {
    let n = g.vertex_count();
    guard(
        "vertex plus edge count for the total condition",
        n + g.edge_count(),
        limit.min(TABLE_LIMIT),
    )?;
    let items = Items::total(g)?;
    let classes = items.classes(|x| if x < n { lists.vertex_list(x) } else { lists.edge_list(x - n) });
    Ok(items.check(&classes, first))
}

/// Maximum over all sets `S` of vertices and edges of
/// `ceil(|S| / total independence number of S)`.
pub fn total_hall_condition_number(g: &Graph) -> Result<HallReport> {
    total_hall_condition_number_guarded(g, HallGuards::default().total_index)
}

pub fn total_hall_condition_number_guarded(g: &Graph, limit: usize) -> Result<HallReport> {
    guard("vertex count for the total index", g.vertex_count(), limit)?;
    Ok(Items::total(g)?.max_ratio(false))
}

/// Smallest `l` such that giving every vertex and edge `{0, .., l-1}`
/// satisfies Hall's total condition.
pub fn total_hall_condition_number_via_lists(g: &Graph) -> Result<usize> {
    total_hall_condition_number_via_lists_guarded(g, HallGuards::default().total_index_lists)
}

/// `limit` bounds the number of vertices plus edges.
pub fn total_hall_condition_number_via_lists_guarded(g: &Graph, limit: usize) -> Result<usize> {
    let mut l = 0;
    loop {
        let lists = TotalListAssignment::uniform(g, l);
        if total_check(g, &lists, limit, true)?.is_satisfied() {
            return Ok(l);
        }
        l += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, graphs_up_to, GraphKind};
    use crate::oracle::matching_number;

    fn edge() -> Graph {
        Graph::new(2, vec![(0, 1)]).unwrap()
    }

    #[test]
    fn edge_condition_examples() {
        let e = edge();
        let one = ListAssignment::new(&e, vec![ColorSet::new(vec![1])]).unwrap();
        assert_eq!(check_hall_edge_condition(&e, &one).unwrap(), HallCheck::Satisfied);

        let k3 = generate(GraphKind::Complete(3)).unwrap();
        let ones = ListAssignment::new(&k3, vec![ColorSet::new(vec![1]); 3]).unwrap();
        assert_eq!(
            check_hall_edge_condition(&k3, &ones).unwrap(),
            HallCheck::Violated {
                witness: vec![0, 1, 2],
                witness_edges: vec![0, 1, 2],
                size: 3,
                capacity: 1
            }
        );
        let three = ListAssignment::new(&k3, vec![ColorSet::new(vec![1, 2, 3]); 3]).unwrap();
        assert!(check_hall_edge_condition(&k3, &three).unwrap().is_satisfied());
    }

    #[test]
    fn star_with_a_chord_needs_its_degree() {
        // vertex 4 meets every other vertex, plus the edge 23; no vertex
        // subset isolates the star, but the edge set does
        let g = Graph::new(5, vec![(0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = hall_condition_index(&g).unwrap();
        assert_eq!((r.value, r.numerator, r.denominator), (4, 4, 1));
        assert_eq!(r.witness_edges, vec![0, 1, 3, 4]);
        assert_eq!(hall_condition_index_via_lists(&g).unwrap(), 4);
        assert!(!check_hall_edge_condition(&g, &uniform_lists(&g, 3)).unwrap().is_satisfied());
    }

    #[test]
    fn edge_index_examples() {
        assert_eq!(hall_condition_index(&edge()).unwrap().value, 1);
        let c5 = hall_condition_index(&generate(GraphKind::Cycle(5)).unwrap()).unwrap();
        assert_eq!(
            c5,
            HallReport {
                value: 3,
                witness: vec![0, 1, 2, 3, 4],
                witness_edges: vec![0, 1, 2, 3, 4],
                numerator: 5,
                denominator: 2
            }
        );
        // the whole of K4 already reaches 3 = 6/2
        let k4 = hall_condition_index(&generate(GraphKind::Complete(4)).unwrap()).unwrap();
        assert_eq!((k4.value, k4.numerator, k4.denominator), (3, 6, 2));

        assert_eq!(hall_condition_index_via_lists(&edge()).unwrap(), 1);
        assert_eq!(hall_condition_index_via_lists(&generate(GraphKind::Cycle(5)).unwrap()).unwrap(), 3);
        assert_eq!(hall_condition_index_via_lists(&generate(GraphKind::Complete(3)).unwrap()).unwrap(), 3);
        assert_eq!(hall_condition_index(&Graph::empty(3)).unwrap().value, 0);
    }

    #[test]
    fn connected_and_unrestricted_agree_on_a_disjoint_union() {
        let g = Graph::new(7, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6)]).unwrap();
        let a = hall_condition_index_guarded(&g, 16, true).unwrap();
        let b = hall_condition_index_guarded(&g, 16, false).unwrap();
        assert_eq!(a.value, 3);
        assert_eq!(b.value, 3);
        assert_eq!(a.witness_edges, vec![0, 1, 2]);
    }

    #[test]
    fn total_condition_examples() {
        let v = Graph::empty(1);
        let l = TotalListAssignment::new(&v, vec![], vec![ColorSet::new(vec![1])]).unwrap();
        assert!(check_hall_total_condition(&v, &l).unwrap().is_satisfied());

        let e = edge();
        let l = TotalListAssignment::new(&e, vec![ColorSet::new(vec![1])], vec![ColorSet::new(vec![1]); 2])
            .unwrap();
        assert_eq!(
            check_hall_total_condition(&e, &l).unwrap(),
            HallCheck::Violated {
                witness: vec![0, 1],
                witness_edges: vec![0],
                size: 3,
                capacity: 1
            }
        );

        let k3 = generate(GraphKind::Complete(3)).unwrap();
        let l = TotalListAssignment::new(
            &k3,
            vec![ColorSet::new(vec![1, 2, 3]); 3],
            vec![ColorSet::new(vec![1, 2, 3]); 3],
        )
        .unwrap();
        assert!(check_hall_total_condition(&k3, &l).unwrap().is_satisfied());
    }

    #[test]
    fn total_index_examples() {
        assert_eq!(total_hall_condition_number(&Graph::empty(1)).unwrap().value, 1);
        assert_eq!(total_hall_condition_number(&edge()).unwrap().value, 3);
        let k3 = total_hall_condition_number(&generate(GraphKind::Complete(3)).unwrap()).unwrap();
        assert_eq!((k3.value, k3.numerator, k3.denominator), (3, 6, 2));
        // a vertex with both its edges is a clique, so stars reach degree + 1
        let star = generate(GraphKind::CompleteBipartite(1, 3)).unwrap();
        let r = total_hall_condition_number(&star).unwrap();
        assert_eq!((r.value, r.numerator, r.denominator), (4, 4, 1));
        assert_eq!((r.witness, r.witness_edges), (vec![0], vec![0, 1, 2]));
        assert_eq!(total_hall_condition_number_via_lists(&edge()).unwrap(), 3);
    }

    #[test]
    fn guards_are_enforced() {
        let big = generate(GraphKind::Path(17)).unwrap();
        assert!(matches!(hall_condition_index(&big), Err(Error::GuardExceeded { .. })));
        assert!(hall_condition_index_guarded(&big, 17, true).is_ok());
        let k8 = generate(GraphKind::Complete(8)).unwrap();
        assert!(hall_condition_index_via_lists(&k8).is_err());
        assert!(check_hall_edge_condition_guarded(&k8, &uniform_lists(&k8, 7), 64).is_err());
    }

    #[test]
    fn independence_table_is_the_matching_number() {
        for g in graphs_up_to(5).unwrap() {
            let items = Items::edges(&g).unwrap();
            let table = items.independence_table();
            for set in 0usize..(1 << g.edge_count()) {
                let h = g.spanning_subgraph(|e| set >> e & 1 == 1);
                assert_eq!(table[set] as usize, matching_number(&h));
            }
        }
    }
}
