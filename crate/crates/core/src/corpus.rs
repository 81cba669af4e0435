//! Small-graph corpora: named graphs, exhaustive generation up to isomorphism
//! and seeded random graphs of bounded degree.

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Frequently used graphs with fixed vertex numbering.
pub mod named {
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Triangle `0 1 2` with pendant edges `0-3`, `1-4`, `2-5`.
    pub fn pi() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    /// Triangles `0 1 2` and `3 4 5` joined by the matching `i - i+3`.
    pub fn prism() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::new(10, outer.chain(inner).chain(spokes)).unwrap()
    }

    /// `K4` minus the edge `{0, 3}`.
    pub fn k4_minus_edge() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }
}

/// Canonical form of a graph on at most 16 vertices: the lexicographically
/// smallest upper-triangle adjacency string over all relabellings that respect a
/// degree-refined vertex partition. Two graphs are isomorphic iff their
/// canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let n = g.n();
    assert!(n <= 16, "canonical_form is meant for small graphs");
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    // colour refinement to shrink the permutation space
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sig
            .iter_mut()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            colour = next;
            break;
        }
        colour = next;
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
    let mut best: Option<Vec<u64>> = None;
    let mut perm = Vec::with_capacity(n);
    search_labellings(&rows, &mut cells, 0, &mut perm, &mut best);
    best.unwrap_or_default()
}

fn encode(rows: &[u32], perm: &[usize]) -> Vec<u64> {
    // perm[i] = original vertex placed at position i
    let n = perm.len();
    let mut bits = Vec::with_capacity(n);
    for i in 0..n {
        let mut word = 0u64;
        for j in 0..n {
            if rows[perm[i]] >> perm[j] & 1 == 1 {
                word |= 1 << j;
            }
        }
        bits.push(word);
    }
    bits
}

fn search_labellings(
    rows: &[u32],
    cells: &mut Vec<Vec<usize>>,
    cell: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<u64>>,
) {
    if cell == cells.len() {
        let code = encode(rows, perm);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let k = cells[cell].len();
    permute(cells[cell].clone().as_mut_slice(), 0, &mut |p| {
        let before = perm.len();
        perm.extend_from_slice(p);
        debug_assert_eq!(perm.len(), before + k);
        search_labellings(rows, cells, cell + 1, perm, best);
        perm.truncate(before);
    });
}

fn permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Every connected graph with `1..=max_n` vertices satisfying a hereditary
/// property `keep` (closed under deleting a vertex), one per isomorphism class,
/// ordered by vertex count.
///
/// Each connected graph has a vertex whose deletion leaves it connected, so
/// extending every class on `n - 1` vertices by one vertex with a nonempty
/// neighbourhood reaches every class on `n` vertices.
pub fn connected_graphs<F>(max_n: usize, keep: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool,
{
    let mut all = Vec::new();
    if max_n == 0 {
        return all;
    }
    let mut layer = vec![Graph::empty(1)];
    all.extend(layer.iter().cloned());
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 1u32..(1 << (n - 1)) {
                let extra = (0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1));
                let h = Graph::new(n, g.edges().iter().copied().chain(extra)).unwrap();
                if keep(&h) && seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Random connected graph on `n` vertices with maximum degree at most
/// `max_degree`: a random spanning tree of bounded degree followed by up to
/// `extra` attempted chord insertions.
pub fn random_connected_bounded(rng: &mut impl Rng, n: usize, max_degree: usize, extra: usize) -> Graph {
    assert!(max_degree >= 2 || n <= 2);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut deg = vec![0usize; n];
    let mut edges = HashSet::new();
    for i in 1..n {
        let open: Vec<usize> = order[..i].iter().copied().filter(|&v| deg[v] < max_degree).collect();
        let p = open[rng.gen_range(0..open.len())];
        let c = order[i];
        deg[p] += 1;
        deg[c] += 1;
        edges.insert((p.min(c), p.max(c)));
    }
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && deg[u] < max_degree && deg[v] < max_degree && edges.insert((u.min(v), u.max(v))) {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random simple graph on `n` vertices, each pair present with probability `p`.
pub fn random_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect::<Vec<_>>();
    Graph::new(n, edges).unwrap()
}

/// Deterministic generator used by the test corpora.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;

    #[test]
    fn canonical_form_identifies_relabellings() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&star));
    }

    #[test]
    fn connected_graph_counts_match_known_sequence() {
        // connected graphs on 1..=6 vertices: 1, 1, 2, 6, 21, 112
        let all = connected_graphs(6, |_| true);
        let counts: Vec<usize> = (1..=6).map(|n| all.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn hereditary_filters() {
        let sub = connected_graphs(4, |g| g.max_degree() <= 2);
        assert_eq!(sub.iter().filter(|g| g.n() == 4).count(), 2); // P4 and C4
        let tf = connected_graphs(5, |g| girth(g).is_none_or(|l| l >= 4));
        // triangle-free connected graphs on 5 vertices: 6
        assert_eq!(tf.iter().filter(|g| g.n() == 5).count(), 6);
    }

    #[test]
    fn random_bounded_graphs_respect_constraints() {
        let mut rng = seeded_rng(7);
        for n in 2..12 {
            let g = random_connected_bounded(&mut rng, n, 3, n);
            assert!(g.is_connected());
            assert!(g.max_degree() <= 3);
        }
    }
}
