//! Exhaustive enumeration of quasi-transitive partial orientations.
//!
//! Each edge `(lo, hi)` of the base graph takes one of three values, ordered
//! [`EdgeChoice::Kept`] < [`EdgeChoice::Forward`] (`lo -> hi`) <
//! [`EdgeChoice::Backward`] (`hi -> lo`). Results are produced in lexicographic
//! order of the value vector, edge 0 most significant.

use super::predicate::{is_qt, PartialOrientation};
use super::SolverError;
use crate::graph::{Graph, MixedGraph};

/// Hard cap on the number of edges accepted by the enumerators (3^16 states).
pub const ENUMERATION_EDGE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeChoice {
    Kept,
    Forward,
    Backward,
}

impl EdgeChoice {
    const ALL: [EdgeChoice; 3] = [EdgeChoice::Kept, EdgeChoice::Forward, EdgeChoice::Backward];
}

/// Mixed graph obtained by applying `choices[i]` to edge `i` of `g`.
pub fn apply_choices(g: &Graph, choices: &[EdgeChoice]) -> MixedGraph {
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (&(lo, hi), &c) in g.edges().iter().zip(choices) {
        match c {
            EdgeChoice::Kept => edges.push((lo, hi)),
            EdgeChoice::Forward => arcs.push((lo, hi)),
            EdgeChoice::Backward => arcs.push((hi, lo)),
        }
    }
    MixedGraph::new(g.n(), edges, arcs).expect("one adjacency per edge")
}

fn check_cap(g: &Graph) -> Result<(), SolverError> {
    if g.edge_count() > ENUMERATION_EDGE_CAP {
        return Err(SolverError::TooManyEdges { edges: g.edge_count(), cap: ENUMERATION_EDGE_CAP });
    }
    Ok(())
}

/// Streams every quasi-transitive partial orientation of `g`.
///
/// Depth-first over edges in index order. A partial assignment is abandoned as
/// soon as two decided arcs form an induced 2-dipath, or a kept edge whose
/// possible 2-dipaths are all decided turns out uncovered; both are violations
/// of the final mixed graph, so no result is lost.
pub fn enumerate_qt(g: &Graph) -> Result<QtEnumerator, SolverError> {
    check_cap(g)?;
    Ok(QtEnumerator::new(g.clone()))
}

/// Literal scan of all 3^m assignments, each checked with [`is_qt`]. Same
/// results and order as [`enumerate_qt`], without pruning.
pub fn enumerate_qt_exhaustive(g: &Graph) -> Result<impl Iterator<Item = PartialOrientation>, SolverError> {
    check_cap(g)?;
    let g = g.clone();
    let m = g.edge_count();
    let total = 3u64.pow(m as u32);
    Ok((0..total).filter_map(move |code| {
        let mut choices = vec![EdgeChoice::Kept; m];
        let mut rest = code;
        for slot in choices.iter_mut().rev() {
            *slot = EdgeChoice::ALL[(rest % 3) as usize];
            rest /= 3;
        }
        let mixed = apply_choices(&g, &choices);
        is_qt(&mixed).ok()?;
        Some(PartialOrientation::new_unchecked(g.clone(), mixed))
    }))
}

pub struct QtEnumerator {
    g: Graph,
    // per edge: (other edge, shared centre) for pairs whose far ends are non-adjacent
    conflicts: Vec<Vec<(usize, usize)>>,
    // per edge: 2-dipath supports (centre, edge to first end, edge to second end)
    supports: Vec<Vec<(usize, usize, usize)>>,
    // due[i]: edges whose coverage is fully decided once edge i is assigned
    due: Vec<Vec<usize>>,
    choice: Vec<u8>,
    depth: usize,
    finished: bool,
}

impl QtEnumerator {
    fn new(g: Graph) -> Self {
        let m = g.edge_count();
        let mut conflicts = vec![Vec::new(); m];
        let mut supports = vec![Vec::new(); m];
        let mut due = vec![Vec::new(); m];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            for (w, far) in [(a, b), (b, a)] {
                for &x in g.neighbors(w) {
                    if x != far && !g.has_edge(x, far) {
                        let j = g.edge_index(w, x).unwrap();
                        if j < i {
                            conflicts[i].push((j, w));
                        }
                    }
                }
            }
            let mut last = i;
            for w in g.common_neighbors(a, b) {
                let (ea, eb) = (g.edge_index(a, w).unwrap(), g.edge_index(w, b).unwrap());
                last = last.max(ea).max(eb);
                supports[i].push((w, ea, eb));
            }
            due[last].push(i);
        }
        QtEnumerator {
            g,
            conflicts,
            supports,
            due,
            choice: vec![0; m],
            depth: 0,
            finished: false,
        }
    }

    // +1 arc into w, -1 arc out of w, 0 kept
    fn flow(&self, e: usize, w: usize) -> i8 {
        let (lo, hi) = self.g.edges()[e];
        match (self.choice[e], w == hi) {
            (0, _) => 0,
            (1, true) | (2, false) => 1,
            _ => {
                debug_assert!(w == lo || w == hi);
                -1
            }
        }
    }

    fn arc(&self, e: usize, tail: usize) -> bool {
        let (lo, _) = self.g.edges()[e];
        self.choice[e] == if tail == lo { 1 } else { 2 }
    }

    fn consistent(&self, i: usize) -> bool {
        for &(j, w) in &self.conflicts[i] {
            if self.flow(i, w) * self.flow(j, w) == -1 {
                return false;
            }
        }
        self.due[i].iter().all(|&e| {
            if self.choice[e] != 0 {
                return true;
            }
            let (a, b) = self.g.edges()[e];
            self.supports[e].iter().any(|&(w, ea, eb)| {
                (self.arc(ea, a) && self.arc(eb, w)) || (self.arc(eb, b) && self.arc(ea, w))
            })
        })
    }

    fn current(&self) -> PartialOrientation {
        let choices: Vec<EdgeChoice> = self.choice.iter().map(|&c| EdgeChoice::ALL[c as usize]).collect();
        let mixed = apply_choices(&self.g, &choices);
        debug_assert_eq!(is_qt(&mixed), Ok(()));
        PartialOrientation::new_unchecked(self.g.clone(), mixed)
    }
}

impl Iterator for QtEnumerator {
    type Item = PartialOrientation;

    fn next(&mut self) -> Option<PartialOrientation> {
        let m = self.choice.len();
        loop {
            if self.finished {
                return None;
            }
            if self.depth == m {
                let out = self.current();
                if m == 0 {
                    self.finished = true;
                } else {
                    self.depth = m - 1;
                    self.choice[m - 1] += 1;
                }
                return Some(out);
            }
            let i = self.depth;
            if self.choice[i] == 3 {
                self.choice[i] = 0;
                if i == 0 {
                    self.finished = true;
                    return None;
                }
                self.depth -= 1;
                self.choice[self.depth] += 1;
            } else if self.consistent(i) {
                self.depth += 1;
            } else {
                self.choice[i] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, named};

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_qt(&named::complete(2)).unwrap().count(), 2);
        // 8 full orientations plus 6 with one kept edge covered by the other two arcs
        assert_eq!(enumerate_qt(&named::complete(3)).unwrap().count(), 14);
        assert_eq!(enumerate_qt(&named::cycle(5)).unwrap().count(), 0);
        assert_eq!(enumerate_qt(&Graph::empty(3)).unwrap().count(), 1);
    }

    #[test]
    fn k2_results_are_the_two_arcs() {
        let all: Vec<_> = enumerate_qt(&named::complete(2)).unwrap().collect();
        assert_eq!(all[0].mixed().arcs(), &[(0, 1)]);
        assert_eq!(all[1].mixed().arcs(), &[(1, 0)]);
    }

    #[test]
    fn cap_is_enforced() {
        let big = named::complete(7); // 21 edges
        assert!(matches!(enumerate_qt(&big), Err(SolverError::TooManyEdges { edges: 21, .. })));
        assert!(enumerate_qt_exhaustive(&big).is_err());
    }

    #[test]
    fn pruned_enumeration_matches_literal_scan() {
        let mut graphs = corpus::connected_graphs(5, |_| true);
        graphs.push(named::pi());
        graphs.push(named::k4_minus_edge());
        for g in graphs {
            let fast: Vec<_> = enumerate_qt(&g).unwrap().map(|p| p.into_mixed()).collect();
            let slow: Vec<_> = enumerate_qt_exhaustive(&g).unwrap().map(|p| p.into_mixed()).collect();
            assert_eq!(fast, slow, "graph {:?}", g.edges());
        }
    }
}
