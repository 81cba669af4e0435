//! Structural queries: triangles, odd cycles, girth and vertex cuts.

use super::{EdgeSet, Graph, GraphError, Subgraph};

/// Largest independent cut searched by default; the clause gadget needs three.
pub const DEFAULT_CUT_SIZE: usize = 3;

/// Edges lying in no triangle, i.e. whose ends have no common neighbour.
pub fn triangle_free_edges(g: &Graph) -> EdgeSet {
    EdgeSet::new(
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| g.common_neighbors(u, v).is_empty()),
    )
}

/// The graph formed by the edges in `x`, on the endpoints of `x` only.
pub fn edge_subgraph(g: &Graph, x: &EdgeSet) -> Result<Subgraph, GraphError> {
    let mut ends = Vec::with_capacity(2 * x.len());
    for (u, v) in x.iter() {
        if !g.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        ends.push(u);
        ends.push(v);
    }
    ends.sort_unstable();
    ends.dedup();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in ends.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<_> = x.iter().map(|(u, v)| (index[u], index[v])).collect();
    Ok(Subgraph {
        graph: Graph::new(ends.len(), edges)?,
        original: ends,
    })
}

/// Two-colouring of `g` (`true` marks one side), or `None` when `g` has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    colour(g).ok()
}

/// An odd cycle of `g` as a closed vertex sequence (first vertex not repeated),
/// or `None` when `g` is bipartite.
pub fn has_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    colour(g).err()
}

fn colour(g: &Graph) -> Result<Vec<bool>, Vec<usize>> {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if depth[y] % 2 == depth[x] % 2 {
                    return Err(tree_cycle(x, y, &depth, &parent));
                }
            }
        }
    }
    Ok(depth.iter().map(|d| d % 2 == 0).collect())
}

// Cycle closed by the non-tree edge xy, whose ends sit at equal depth parity.
fn tree_cycle(x: usize, y: usize, depth: &[usize], parent: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Articulation points, ascending.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut counter = 0;
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (x, p, ref mut pos)) = stack.last_mut() {
            if let Some(&y) = g.neighbors(x).get(*pos) {
                *pos += 1;
                if order[y] == usize::MAX {
                    order[y] = counter;
                    low[y] = counter;
                    counter += 1;
                    if x == root {
                        root_children += 1;
                    }
                    stack.push((y, x, 0));
                } else if y != p {
                    low[x] = low[x].min(order[y]);
                }
            } else {
                stack.pop();
                if p != usize::MAX {
                    low[p] = low[p].min(low[x]);
                    if p != root && low[x] >= order[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// An independent vertex cut `cut` with the two sides it separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCut {
    pub cut: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl VertexCut {
    /// Re-checks the defining conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut part = vec![0u8; n];
        for (label, set) in [(1u8, &self.cut), (2, &self.side_a), (3, &self.side_b)] {
            for &v in set {
                if v >= n || part[v] != 0 {
                    return false;
                }
                part[v] = label;
            }
        }
        if part.contains(&0) || self.cut.is_empty() || self.side_a.is_empty() || self.side_b.is_empty() {
            return false;
        }
        let independent = self
            .cut
            .iter()
            .all(|&v| g.neighbors(v).iter().all(|&w| part[w] != 1));
        let separated = g
            .edges()
            .iter()
            .all(|&(u, v)| !matches!((part[u], part[v]), (2, 3) | (3, 2)));
        let sees_both = self.cut.iter().all(|&v| {
            g.neighbors(v).iter().any(|&w| part[w] == 2) && g.neighbors(v).iter().any(|&w| part[w] == 3)
        });
        independent && separated && sees_both
    }
}

// Components of g - I beyond this count are not split into every bipartition.
const MAX_SPLIT_COMPONENTS: usize = 12;

/// Every independent vertex cut of size at most `max_size`, with each way of
/// grouping the components of `g - I` into two sides. `side_a` always holds the
/// component containing the smallest vertex outside the cut.
pub fn independent_vertex_cuts(g: &Graph, max_size: usize) -> Vec<VertexCut> {
    let n = g.n();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    independent_sets(g, 0, max_size, &mut chosen, &mut |cut| {
        let rest = g.remove_vertices(cut);
        let comps: Vec<Vec<usize>> = rest
            .graph
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| rest.original[v]).collect())
            .collect();
        if comps.len() < 2 || comps.len() > MAX_SPLIT_COMPONENTS {
            return;
        }
        let mut comp_of = vec![usize::MAX; n];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let k = comps.len();
        // component 0 always in side_a; mask bit i set puts component i in side_b
        for mask in 1u32..(1 << (k - 1)) {
            let in_b = |c: usize| c > 0 && mask >> (c - 1) & 1 == 1;
            let sees_both = cut.iter().all(|&v| {
                let nb = g.neighbors(v);
                nb.iter().any(|&w| !in_b(comp_of[w])) && nb.iter().any(|&w| in_b(comp_of[w]))
            });
            if !sees_both {
                continue;
            }
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (i, c) in comps.iter().enumerate() {
                if in_b(i) {
                    b.extend_from_slice(c);
                } else {
                    a.extend_from_slice(c);
                }
            }
            a.sort_unstable();
            b.sort_unstable();
            out.push(VertexCut { cut: cut.to_vec(), side_a: a, side_b: b });
        }
    });
    out
}

fn independent_sets(
    g: &Graph,
    start: usize,
    max_size: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if !chosen.is_empty() {
        visit(chosen);
    }
    if chosen.len() == max_size {
        return;
    }
    for v in start..g.n() {
        if chosen.iter().any(|&c| g.has_edge(c, v)) {
            continue;
        }
        chosen.push(v);
        independent_sets(g, v + 1, max_size, chosen, visit);
        chosen.pop();
    }
}
