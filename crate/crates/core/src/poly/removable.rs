use super::{require_max_degree_3, PolyError};
use crate::graph::{Graph, MixedGraph};
use crate::qt::{verify_witness, PartialOrientation};
use std::collections::BTreeSet;
use std::fmt;

/// One deleted vertex `u` with its neighbours `v`, `w` and their outer
/// neighbours `v_outer`, `w_outer`. Ids refer to the original graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RemovalStep {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub v_outer: usize,
    pub w_outer: usize,
}

/// Ordered record of deleted removable vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RemovalTrace {
    pub steps: Vec<RemovalStep>,
}

impl RemovalTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn removed(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().map(|s| s.u)
    }

    /// Parses `r <u> <v> <w> <v'> <w'>` lines; `c` lines and blanks are skipped.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let mut f = line.split_whitespace();
            match f.next() {
                None | Some("c") => continue,
                Some("r") => {
                    let ids: Vec<usize> = f
                        .map(|t| t.parse().map_err(|_| format!("line {}: bad vertex id `{t}`", i + 1)))
                        .collect::<Result<_, _>>()?;
                    if ids.len() != 5 {
                        return Err(format!("line {}: expected 5 vertex ids", i + 1));
                    }
                    steps.push(RemovalStep { u: ids[0], v: ids[1], w: ids[2], v_outer: ids[3], w_outer: ids[4] });
                }
                Some(t) => return Err(format!("line {}: unknown record `{t}`", i + 1)),
            }
        }
        Ok(RemovalTrace { steps })
    }
}

impl fmt::Display for RemovalTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "r {} {} {} {} {}", s.u, s.v, s.w, s.v_outer, s.w_outer)?;
        }
        Ok(())
    }
}

/// Degree-two vertex whose neighbours are adjacent, have degree three, and
/// share no common neighbour other than `u`.
pub fn is_removable(g: &Graph, u: usize) -> Result<bool, PolyError> {
    require_max_degree_3(g)?;
    Ok(removal_step(g, u).is_some())
}

pub(crate) fn removal_step(g: &Graph, u: usize) -> Option<RemovalStep> {
    let &[v, w] = g.neighbors(u) else { return None };
    if !g.has_edge(v, w) || g.degree(v) != 3 || g.degree(w) != 3 {
        return None;
    }
    if g.common_neighbors(v, w) != [u] {
        return None;
    }
    let outer = |x: usize, other: usize| *g.neighbors(x).iter().find(|&&y| y != u && y != other).unwrap();
    Some(RemovalStep { u, v, w, v_outer: outer(v, w), w_outer: outer(w, v) })
}

/// Deletes every removable vertex of `g` at once. The reduced graph keeps the
/// surviving vertices in increasing id order.
pub fn reduce_removable(g: &Graph) -> Result<(Graph, RemovalTrace), PolyError> {
    require_max_degree_3(g)?;
    let steps: Vec<RemovalStep> = (0..g.n()).filter_map(|u| removal_step(g, u)).collect();
    let removed: Vec<usize> = steps.iter().map(|s| s.u).collect();
    let reduced = g.remove_vertices(&removed).graph;
    debug_assert!((0..reduced.n()).all(|x| removal_step(&reduced, x).is_none()));
    Ok((reduced, RemovalTrace { steps }))
}

/// Lifts a quasi-transitive partial orientation of the reduced graph back to
/// the graph the trace was taken from.
///
/// Steps are replayed last to first. Around each `u` the path
/// `v_outer v w w_outer` is alternating; with `v` the sink the arcs `w -> u`
/// and `u -> v` are added (reversed when `v` is the source), and a kept `vw`
/// becomes the arc from the source to the sink.
pub fn reinsert_removable(witness: &PartialOrientation, trace: &RemovalTrace) -> Result<PartialOrientation, PolyError> {
    verify_witness(witness.base(), witness.mixed()).map_err(PolyError::InvalidWitness)?;
    let n = witness.base().n() + trace.len();
    let mut gone = vec![false; n];
    for u in trace.removed() {
        if u >= n || std::mem::replace(&mut gone[u], true) {
            return Err(PolyError::TraceInconsistent(format!("removed vertex {u} is out of range or repeated")));
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
    let lifted = witness.mixed().relabel(&kept, n);
    let mut arcs: BTreeSet<(usize, usize)> = lifted.arcs().iter().copied().collect();
    let mut edges: BTreeSet<(usize, usize)> = lifted.edges().iter().copied().collect();
    let mut base: Vec<(usize, usize)> = witness.base().edges().iter().map(|&(a, b)| (kept[a], kept[b])).collect();

    for s in trace.steps.iter().rev() {
        let (source, sink) = if arcs.contains(&(s.v_outer, s.v)) {
            (s.w, s.v)
        } else if arcs.contains(&(s.v, s.v_outer)) {
            (s.v, s.w)
        } else {
            return Err(PolyError::TraceInconsistent(format!(
                "{}-{} is not an arc of the witness",
                s.v, s.v_outer
            )));
        };
        if arcs.contains(&(sink, source)) {
            return Err(PolyError::TraceInconsistent(format!("arc {sink}->{source} breaks the alternating path")));
        }
        edges.remove(&(s.v.min(s.w), s.v.max(s.w)));
        arcs.insert((source, sink));
        arcs.insert((source, s.u));
        arcs.insert((s.u, sink));
        base.push((s.u, s.v));
        base.push((s.u, s.w));
    }
    let g = Graph::new(n, base).map_err(|e| PolyError::TraceInconsistent(e.to_string()))?;
    let m = MixedGraph::new(n, edges, arcs).map_err(|e| PolyError::TraceInconsistent(e.to_string()))?;
    verify_witness(&g, &m).map_err(|e| PolyError::TraceInconsistent(e.to_string()))?;
    Ok(PartialOrientation::new(g, m).expect("verified above"))
}
