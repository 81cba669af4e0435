//! The maximum-degree-three characterisation.
//!
//! After deleting removable vertices, a graph with maximum degree three is a
//! square of an oriented graph exactly when it contains no Π (a triangle with a
//! pendant edge at each corner) and its triangle-free edges form a bipartite
//! graph.

use super::removable::{reinsert_removable, removal_step, RemovalTrace};
use super::{require_max_degree_3, PolyError};
use crate::graph::Graph;
use crate::qt::{decide_qt, PartialOrientation, SolveOptions};
use std::cell::Cell;

/// A copy of Π: triangle `u v w` with pendant edges `u u'`, `v v'`, `w w'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PiEmbedding {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub u_pendant: usize,
    pub v_pendant: usize,
    pub w_pendant: usize,
}

impl PiEmbedding {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let ids = [self.u, self.v, self.w, self.u_pendant, self.v_pendant, self.w_pendant];
        let distinct = ids.iter().enumerate().all(|(i, a)| ids[..i].iter().all(|b| a != b));
        distinct
            && g.has_edge(self.u, self.v)
            && g.has_edge(self.v, self.w)
            && g.has_edge(self.u, self.w)
            && g.has_edge(self.u, self.u_pendant)
            && g.has_edge(self.v, self.v_pendant)
            && g.has_edge(self.w, self.w_pendant)
    }
}

// Counts adjacency inspections.
#[derive(Default)]
struct Meter(Cell<u64>);

impl Meter {
    fn add(&self, k: usize) {
        self.0.set(self.0.get() + k as u64);
    }
}

pub fn detect_pi(g: &Graph) -> Result<Option<PiEmbedding>, PolyError> {
    require_max_degree_3(g)?;
    Ok(find_pi(g, &Meter::default()))
}

fn find_pi(g: &Graph, meter: &Meter) -> Option<PiEmbedding> {
    for u in 0..g.n() {
        meter.add(1);
        if g.degree(u) != 3 {
            continue;
        }
        for &v in g.neighbors(u).iter().filter(|&&v| v > u && g.degree(v) == 3) {
            for &w in g.neighbors(v).iter().filter(|&&w| w > v && g.degree(w) == 3) {
                meter.add(3);
                if !g.has_edge(u, w) {
                    continue;
                }
                let outer = |x: usize, a: usize, b: usize| *g.neighbors(x).iter().find(|&&y| y != a && y != b).unwrap();
                let (pu, pv, pw) = (outer(u, v, w), outer(v, u, w), outer(w, u, v));
                if pu != pv && pv != pw && pu != pw {
                    return Some(PiEmbedding { u, v, w, u_pendant: pu, v_pendant: pv, w_pendant: pw });
                }
            }
        }
    }
    None
}

/// Decides quasi-transitive partial orientability for graphs of maximum degree
/// at most three in polynomial time.
pub fn decide_deg3(g: &Graph) -> Result<bool, PolyError> {
    Ok(decide_deg3_with_work(g)?.0)
}

/// [`decide_deg3`] together with the number of adjacency inspections made.
pub fn decide_deg3_with_work(g: &Graph) -> Result<(bool, u64), PolyError> {
    require_max_degree_3(g)?;
    let meter = Meter::default();
    let removed: Vec<usize> = (0..g.n())
        .filter(|&u| {
            meter.add(1 + g.degree(u));
            removal_step(g, u).is_some()
        })
        .collect();
    meter.add(g.n() + g.edge_count());
    let reduced = g.remove_vertices(&removed).graph;
    let answer = find_pi(&reduced, &meter).is_none() && triangle_free_part_is_bipartite(&reduced, &meter);
    Ok((answer, meter.0.get()))
}

// Two-colours the edges lying in no triangle without materialising the subgraph.
fn triangle_free_part_is_bipartite(g: &Graph, meter: &Meter) -> bool {
    let n = g.n();
    let free = |a: usize, b: usize| {
        meter.add(g.degree(a) + g.degree(b));
        g.common_neighbors(a, b).is_empty()
    };
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let cx = colour[x].unwrap();
            for &y in g.neighbors(x) {
                if !free(x, y) {
                    continue;
                }
                match colour[y] {
                    None => {
                        colour[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(cy) if cy == cx => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// A witness for a YES instance of [`decide_deg3`]: the reduced graph is solved
/// exactly and the removable vertices are put back. `Ok(None)` on NO.
pub fn deg3_witness(g: &Graph, opts: &SolveOptions) -> Result<Option<PartialOrientation>, PolyError> {
    if !decide_deg3(g)? {
        return Ok(None);
    }
    let (reduced, trace): (Graph, RemovalTrace) = super::reduce_removable(g)?;
    let small = decide_qt(&reduced, opts)?.ok_or(PolyError::Disagreement)?;
    reinsert_removable(&small, &trace).map(Some)
}
