//! Simple graphs, mixed graphs and the directed-square operation.
//!
//! Vertices are dense ids `0..n`. Both [`Graph`] and [`MixedGraph`] are
//! immutable once built; every operation returns a new value.

mod dot;
mod io;
mod mixed;
mod query;

pub use dot::{graph_to_dot, mixed_to_dot};
pub use io::{parse_graph, parse_mixed, write_graph, write_mixed, ParseError};
pub use mixed::{mixed_square, mixed_square_with_witnesses, undirected_square, underlying, MixedGraph, SquareEdge};
pub use query::{
    bipartition, cut_vertices, edge_subgraph, girth, has_odd_cycle, independent_vertex_cuts,
    triangle_free_edges, VertexCut, DEFAULT_CUT_SIZE,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("pair {{{0}, {1}}} listed more than once")]
    Duplicate(usize, usize),
    #[error("pair {{{0}, {1}}} carries both an edge and an arc")]
    EdgeArcConflict(usize, usize),
    #[error("arcs {0}->{1} and {1}->{0} form a digon")]
    Digon(usize, usize),
    #[error("{{{0}, {1}}} is not an edge of the host graph")]
    NotAnEdge(usize, usize),
}

#[inline]
pub(crate) fn unordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated pairs and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            list.push(unordered(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Duplicate(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Same as [`Graph::new`] but merges repeated pairs instead of failing.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<_> = edges.into_iter().collect();
        list.iter_mut().for_each(|e| *e = unordered(e.0, e.1));
        list.sort_unstable();
        list.dedup();
        Self::new(n, list)
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically. The position of
    /// an edge in this slice is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&unordered(u, v)).ok()
    }

    /// Common neighbours of `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Subgraph induced by `vertices`, re-indexed in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Subgraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| unordered(index[u], index[v]));
        let mut list: Vec<_> = edges.collect();
        list.sort_unstable();
        Subgraph {
            graph: Graph::from_sorted(vertices.len(), list),
            original: vertices.to_vec(),
        }
    }

    /// `self - removed`, remaining vertices re-indexed in increasing order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Subgraph {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// A graph carved out of a host graph together with the host id of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `original[i]` is the host vertex that became vertex `i`.
    pub original: Vec<usize>,
}

/// Sorted set of unordered pairs, each an edge of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<(usize, usize)>);

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut v: Vec<_> = pairs.into_iter().map(|(a, b)| unordered(a, b)).collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.binary_search(&unordered(u, v)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }
}
