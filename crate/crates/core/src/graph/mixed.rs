use super::{unordered, Graph, GraphError};

/// Graph with undirected edges and directed arcs on disjoint vertex pairs.
///
/// An arc-only mixed graph is an oriented graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    und: Vec<Vec<usize>>,
}

impl MixedGraph {
    pub fn new<E, A>(n: usize, edges: E, arcs: A) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = (usize, usize)>,
        A: IntoIterator<Item = (usize, usize)>,
    {
        let check = |u: usize, v: usize| -> Result<(), GraphError> {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            Ok(())
        };
        let mut e = Vec::new();
        for (u, v) in edges {
            check(u, v)?;
            e.push(unordered(u, v));
        }
        let mut a = Vec::new();
        for (u, v) in arcs {
            check(u, v)?;
            a.push((u, v));
        }
        e.sort_unstable();
        a.sort_unstable();
        if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Duplicate(w[0].0, w[0].1));
        }
        if let Some(w) = a.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Duplicate(w[0].0, w[0].1));
        }
        for &(u, v) in &a {
            if a.binary_search(&(v, u)).is_ok() {
                return Err(GraphError::Digon(u.min(v), u.max(v)));
            }
            if e.binary_search(&unordered(u, v)).is_ok() {
                let (x, y) = unordered(u, v);
                return Err(GraphError::EdgeArcConflict(x, y));
            }
        }
        Ok(Self::from_sorted(n, e, a))
    }

    /// Oriented graph with the given arcs and no edges.
    pub fn oriented<A: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: A) -> Result<Self, GraphError> {
        Self::new(n, [], arcs)
    }

    /// Every edge of `g` kept undirected.
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_sorted(g.n(), g.edges().to_vec(), Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>, arcs: Vec<(usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut und = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for &(u, v) in &edges {
            und[u].push(v);
            und[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()).chain(und.iter_mut()) {
            list.sort_unstable();
        }
        MixedGraph { n, edges, arcs, out, inn, und }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Undirected edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Arcs as `(tail, head)`, sorted.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn edge_neighbors(&self, v: usize) -> &[usize] {
        &self.und[v]
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.out[tail].binary_search(&head).is_ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.und[u].binary_search(&v).is_ok()
    }

    /// Adjacent through an edge or an arc in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// The oriented graph left after deleting every edge.
    pub fn arcs_only(&self) -> MixedGraph {
        Self::from_sorted(self.n, Vec::new(), self.arcs.clone())
    }

    /// Every arc reversed, edges untouched.
    pub fn reversed(&self) -> MixedGraph {
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Self::from_sorted(self.n, self.edges.clone(), arcs)
    }

    /// Renames vertex `v` to `map[v]` in a mixed graph on `n` vertices.
    /// Panics if `map` is not injective into `0..n`.
    pub fn relabel(&self, map: &[usize], n: usize) -> MixedGraph {
        MixedGraph::new(
            n,
            self.edges.iter().map(|&(u, v)| (map[u], map[v])),
            self.arcs.iter().map(|&(u, v)| (map[u], map[v])),
        )
        .expect("relabelling must be injective")
    }

    /// Restriction to the vertices in `keep` (re-indexed in the order given).
    pub fn induced(&self, keep: &[usize]) -> MixedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let inside = |&(u, v): &(usize, usize)| index[u] != usize::MAX && index[v] != usize::MAX;
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| inside(e))
            .map(|&(u, v)| unordered(index[u], index[v]))
            .collect();
        let mut arcs: Vec<_> = self
            .arcs
            .iter()
            .filter(|a| inside(a))
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        edges.sort_unstable();
        arcs.sort_unstable();
        Self::from_sorted(keep.len(), edges, arcs)
    }
}

/// The simple graph obtained by forgetting arc directions.
pub fn underlying(m: &MixedGraph) -> Graph {
    let mut pairs: Vec<_> = m
        .edges
        .iter()
        .copied()
        .chain(m.arcs.iter().map(|&(u, v)| unordered(u, v)))
        .collect();
    pairs.sort_unstable();
    Graph::from_sorted(m.n, pairs)
}

/// An edge added by [`mixed_square`], with the centre of a 2-dipath joining its ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareEdge {
    pub u: usize,
    pub v: usize,
    pub via: usize,
}

/// Adds an edge between every non-adjacent pair at directed distance two.
/// Arcs are never changed.
pub fn mixed_square(m: &MixedGraph) -> MixedGraph {
    mixed_square_with_witnesses(m).0
}

/// [`mixed_square`] plus, for each added edge, the first centre `w`
/// (smallest id) of a 2-dipath `u -> w -> v` or `v -> w -> u`.
pub fn mixed_square_with_witnesses(m: &MixedGraph) -> (MixedGraph, Vec<SquareEdge>) {
    let mut added: Vec<SquareEdge> = Vec::new();
    for w in 0..m.n {
        for &u in &m.inn[w] {
            for &v in &m.out[w] {
                if u != v && !m.adjacent(u, v) {
                    let (a, b) = unordered(u, v);
                    added.push(SquareEdge { u: a, v: b, via: w });
                }
            }
        }
    }
    // centres were visited in increasing order, so a stable sort keeps the smallest first
    added.sort_by_key(|s| (s.u, s.v));
    added.dedup_by_key(|s| (s.u, s.v));
    let mut edges = m.edges.clone();
    edges.extend(added.iter().map(|s| (s.u, s.v)));
    edges.sort_unstable();
    (MixedGraph::from_sorted(m.n, edges, m.arcs.clone()), added)
}

/// `underlying(mixed_square(m))`.
pub fn undirected_square(m: &MixedGraph) -> Graph {
    underlying(&mixed_square(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> MixedGraph {
        MixedGraph::oriented(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_conflicting_adjacencies() {
        assert_eq!(
            MixedGraph::new(3, [(0, 1)], [(1, 0)]),
            Err(GraphError::EdgeArcConflict(0, 1))
        );
        assert_eq!(MixedGraph::new(3, [], [(0, 1), (1, 0)]), Err(GraphError::Digon(0, 1)));
        assert_eq!(MixedGraph::new(3, [], [(2, 2)]), Err(GraphError::Loop(2)));
    }

    #[test]
    fn underlying_forgets_directions() {
        let m = MixedGraph::new(3, [(1, 2)], [(0, 1)]).unwrap();
        assert_eq!(underlying(&m).edges(), &[(0, 1), (1, 2)]);
        let c5 = underlying(&directed_cycle(5));
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(underlying(&MixedGraph::new(3, [], []).unwrap()), Graph::empty(3));
    }

    #[test]
    fn square_of_a_two_dipath_is_a_triangle() {
        let m = MixedGraph::oriented(3, [(0, 1), (1, 2)]).unwrap();
        let (sq, added) = mixed_square_with_witnesses(&m);
        assert_eq!(sq.edges(), &[(0, 2)]);
        assert_eq!(sq.arcs(), m.arcs());
        assert_eq!(added, vec![SquareEdge { u: 0, v: 2, via: 1 }]);
        assert_eq!(underlying(&sq).edge_count(), 3);
    }

    #[test]
    fn square_of_directed_five_cycle_is_complete() {
        let sq = undirected_square(&directed_cycle(5));
        assert_eq!(sq.edge_count(), 10);
    }

    #[test]
    fn oriented_star_and_directed_path_share_a_square() {
        // x=0 -> c=1, c -> y=2, c -> z=3
        let star = MixedGraph::oriented(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let s = undirected_square(&star);
        assert_eq!(s.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        // a=0 -> b=1 -> c=2 -> d=3 gives K4 minus ad
        let path = MixedGraph::oriented(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = undirected_square(&path);
        assert_eq!(p.edges(), &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(s.edge_count(), p.edge_count());
    }

    #[test]
    fn square_adds_nothing_without_arcs() {
        let c4 = MixedGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)], []).unwrap();
        assert_eq!(undirected_square(&c4).edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn existing_arc_blocks_a_parallel_edge() {
        let m = MixedGraph::oriented(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(mixed_square(&m), m);
    }
}
