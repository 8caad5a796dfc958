//! Test-corpus generators: named families, seeded random graphs, and an
//! isomorphism-free catalogue of all small graphs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Random { n: usize, p: f64, seed: u64 },
}

/// Builds a graph of the given family. `Path(k)` has `k` vertices.
pub fn generate(kind: GraphKind) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InvalidInput(msg));
    match kind {
        GraphKind::Path(k) => {
            if k == 0 {
                return bad("path needs at least one vertex".into());
            }
            Graph::new(k, (1..k).map(|i| (i - 1, i)).collect())
        }
        GraphKind::Cycle(k) => {
            if k < 3 {
                return bad(format!("cycle needs at least 3 vertices, got {k}"));
            }
            Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect())
        }
        GraphKind::Complete(k) => {
            if k == 0 {
                return bad("complete graph needs at least one vertex".into());
            }
            let edges = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .collect();
            Graph::new(k, edges)
        }
        GraphKind::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad("both sides of K_{a,b} must be nonempty".into());
            }
            let edges = (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, a + j)))
                .collect();
            Graph::new(a + b, edges)
        }
        GraphKind::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
            }
            for i in 0..5 {
                edges.push((i, i + 5));
            }
            for i in 0..5 {
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::new(10, edges)
        }
        GraphKind::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("edge probability {p} outside [0, 1]"));
            }
            Ok(random_graph(n, p, seed))
        }
    }
}

/// G(n, p): pairs are visited in lexicographic order and each is kept with
/// probability `p`, so the edge ids are lexicographic too.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("random pairs are distinct")
}

pub const CATALOGUE_MAX_VERTICES: usize = 10;

/// Every graph on exactly `n` vertices, one per isomorphism class, in a fixed
/// order (by canonical code). Edges are listed lexicographically.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOGUE_MAX_VERTICES {
        return Err(Error::GuardExceeded {
            what: "catalogue vertex count",
            actual: n,
            limit: CATALOGUE_MAX_VERTICES,
        });
    }
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0);
    for k in 1..n {
        // extend each class on k vertices by a new vertex k with every neighbourhood
        let mut next = BTreeSet::new();
        for &code in &level {
            let rows = decode_rows(code, k);
            for mask in 0u32..(1 << k) {
                let mut ext = rows.clone();
                ext.push(mask);
                for (i, row) in ext.iter_mut().enumerate().take(k) {
                    if mask >> i & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                next.insert(canonical_code(&ext));
            }
        }
        level = next;
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    Ok(level.into_iter().map(|c| code_to_graph(c, n)).collect())
}

/// Connected graphs with `1..=n_max` vertices, grouped by order.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(all_graphs(n)?.into_iter().filter(Graph::is_connected));
    }
    Ok(out)
}

/// All graphs with `1..=n_max` vertices (connected or not).
pub fn graphs_up_to(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(all_graphs(n)?);
    }
    Ok(out)
}

fn pair_bit(i: usize, j: usize) -> u32 {
    debug_assert!(i < j);
    (j * (j - 1) / 2 + i) as u32
}

fn decode_rows(code: u64, n: usize) -> Vec<u32> {
    let mut rows = vec![0u32; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn code_to_graph(code: u64, n: usize) -> Graph {
    let rows = decode_rows(code, n);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for j in i + 1..n {
            if row >> j & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("decoded catalogue graph is simple")
}

/// Canonical code: colour refinement fixes an invariant ordered partition,
/// then the maximum code over all orderings that respect it is taken.
fn canonical_code(rows: &[u32]) -> u64 {
    let n = rows.len();
    let mut colour: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| rows[v] >> w & 1 == 1)
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter_mut()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if distinct.len() == before {
            break;
        }
    }

    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    for v in order {
        match cells.last_mut() {
            Some(cell) if colour[cell[0]] == colour[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }

    let mut best = 0u64;
    let mut labelling = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut labelling, &mut |lab: &[usize]| {
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                if rows[lab[i]] >> lab[j] & 1 == 1 {
                    code |= 1 << pair_bit(i, j);
                }
            }
        }
        best = best.max(code);
    });
    best
}

fn permute_cells(
    cells: &[Vec<usize>],
    idx: usize,
    prefix: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == cells.len() {
        visit(prefix);
        return;
    }
    let mut cell = cells[idx].clone();
    permute_in_place(&mut cell, 0, &mut |perm: &[usize]| {
        let len = prefix.len();
        prefix.extend_from_slice(perm);
        permute_cells(cells, idx + 1, prefix, visit);
        prefix.truncate(len);
    });
}

fn permute_in_place(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_in_place(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_valid(g: &Graph) {
        let n = g.vertex_count();
        let mut seen = std::collections::HashSet::new();
        let mut degree_sum = 0;
        for &(u, v) in g.edges() {
            assert!(u < n && v < n && u != v);
            assert!(seen.insert((u.min(v), u.max(v))));
        }
        for v in 0..n {
            assert!(g.degree(v) <= g.max_degree());
            degree_sum += g.degree(v);
        }
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn named_families() {
        let c5 = generate(GraphKind::Cycle(5)).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count(), c5.max_degree()), (5, 5, 2));
        assert_eq!(generate(GraphKind::Complete(4)).unwrap().edge_count(), 6);
        let k23 = generate(GraphKind::CompleteBipartite(2, 3)).unwrap();
        assert_eq!((k23.edge_count(), k23.max_degree()), (6, 3));
        let p = generate(GraphKind::Petersen).unwrap();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(generate(GraphKind::Path(4)).unwrap().edge_count(), 3);
        for g in [c5, k23, p] {
            assert_valid(&g);
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(GraphKind::Cycle(2)).is_err());
        assert!(generate(GraphKind::Path(0)).is_err());
        assert!(generate(GraphKind::CompleteBipartite(0, 3)).is_err());
        assert!(generate(GraphKind::Random { n: 5, p: 1.5, seed: 0 }).is_err());
    }

    #[test]
    fn random_is_seed_deterministic() {
        let a = generate(GraphKind::Random { n: 10, p: 0.5, seed: 1 }).unwrap();
        let b = generate(GraphKind::Random { n: 10, p: 0.5, seed: 1 }).unwrap();
        assert_eq!(a, b);
        assert_valid(&a);
        let c = generate(GraphKind::Random { n: 10, p: 0.5, seed: 2 }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn catalogue_counts_match_known_sequences() {
        // graphs on n vertices: 1, 2, 4, 11, 34, 156, 1044
        let totals: Vec<usize> = (1..=7).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(totals, vec![1, 2, 4, 11, 34, 156, 1044]);
        // connected: 1, 1, 2, 6, 21, 112, 853
        let connected: Vec<usize> = (1..=7)
            .map(|n| all_graphs(n).unwrap().iter().filter(|g| g.is_connected()).count())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }
}
