//! Exact decision procedure for quasi-transitive partial orientability.
//!
//! Every edge carries a domain over {kept, forward, backward}. Two constraint
//! families are propagated to a fixpoint after each decision:
//!
//! * no induced 2-dipath: for edges `wa`, `wb` with `a`, `b` non-adjacent, `w`
//!   cannot receive one of them and send the other;
//! * coverage: an edge may stay kept only while some common neighbour can still
//!   carry a 2-dipath between its ends. A kept edge with a single remaining
//!   2-dipath forces both of its arcs.
//!
//! Edges in no triangle lose the kept value immediately, and their ends become
//! sources or sinks through the first family. Once the ends of a vertex cut are
//! fixed as sources or sinks, the constraints crossing the cut are entailed; the
//! undecided edges then fall into independent groups which are solved
//! separately (optionally in parallel) and joined.

use super::predicate::PartialOrientation;
use super::SolverError;
use crate::graph::{Graph, MixedGraph};
use rayon::prelude::*;
use std::sync::atomic::{AtomicU64, Ordering};

const KEPT: u8 = 1;
const FWD: u8 = 2;
const REV: u8 = 4;
const VALUE_ORDER: [u8; 3] = [FWD, REV, KEPT];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Abort with [`SolverError::BudgetExceeded`] after this many search nodes.
    pub node_limit: Option<u64>,
    /// Split undecided edges into independent groups at every node.
    pub decompose: bool,
    /// Worker threads for independent groups; 1 runs everything inline.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { node_limit: None, decompose: true, threads: 1 }
    }
}

/// Required direction of every arc at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    /// No incoming arcs.
    Source,
    /// No outgoing arcs.
    Sink,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<PartialOrientation>,
    pub nodes: u64,
}

/// Decides whether `g` admits a quasi-transitive partial orientation and
/// returns one when it does.
pub fn decide_qt(g: &Graph, opts: &SolveOptions) -> Result<Option<PartialOrientation>, SolverError> {
    Ok(Solver::new(g).solve(opts)?.witness)
}

struct Support {
    centre: usize,
    first: usize,
    second: usize,
}

/// Exact solver over a fixed graph; polarity requirements may be added before
/// solving.
pub struct Solver<'g> {
    g: &'g Graph,
    // per edge: (other edge, shared centre) with non-adjacent far ends
    conflicts: Vec<Vec<(usize, usize)>>,
    supports: Vec<Vec<Support>>,
    // edges whose coverage mentions this edge
    covered_by: Vec<Vec<usize>>,
    initial: Vec<u8>,
}

struct Run<'s, 'g> {
    solver: &'s Solver<'g>,
    opts: &'s SolveOptions,
    nodes: AtomicU64,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let m = g.edge_count();
        let mut conflicts = vec![Vec::new(); m];
        let mut supports: Vec<Vec<Support>> = (0..m).map(|_| Vec::new()).collect();
        let mut covered_by = vec![Vec::new(); m];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            for (w, far) in [(a, b), (b, a)] {
                for &x in g.neighbors(w) {
                    if x != far && !g.has_edge(x, far) {
                        conflicts[i].push((g.edge_index(w, x).unwrap(), w));
                    }
                }
            }
            for w in g.common_neighbors(a, b) {
                let (first, second) = (g.edge_index(a, w).unwrap(), g.edge_index(w, b).unwrap());
                covered_by[first].push(i);
                covered_by[second].push(i);
                supports[i].push(Support { centre: w, first, second });
            }
        }
        Solver { g, conflicts, supports, covered_by, initial: vec![KEPT | FWD | REV; m] }
    }

    /// Restricts every arc at `v` to point away from it (source) or into it (sink).
    pub fn require(&mut self, v: usize, polarity: Polarity) -> &mut Self {
        for &x in self.g.neighbors(v) {
            let e = self.g.edge_index(v, x).unwrap();
            let banned = match polarity {
                Polarity::Source => self.head_bit(e, v),
                Polarity::Sink => self.arc_bit(e, v),
            };
            self.initial[e] &= !banned;
        }
        self
    }

    pub fn solve(&self, opts: &SolveOptions) -> Result<SearchOutcome, SolverError> {
        let run = Run { solver: self, opts, nodes: AtomicU64::new(0) };
        let go = || -> Result<Option<Vec<u8>>, SolverError> {
            let mut dom = self.initial.clone();
            let all: Vec<usize> = (0..dom.len()).collect();
            if !self.propagate(&mut dom, all.clone()) {
                return Ok(None);
            }
            run.solve_group(dom, &all)
        };
        let result = if opts.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .expect("thread pool");
            pool.install(go)
        } else {
            go()
        }?;
        let witness = result.map(|dom| {
            let mixed = self.to_mixed(&dom);
            debug_assert_eq!(super::verify_witness(self.g, &mixed), Ok(()));
            PartialOrientation::new_unchecked(self.g.clone(), mixed)
        });
        Ok(SearchOutcome { witness, nodes: run.nodes.load(Ordering::Relaxed) })
    }

    fn to_mixed(&self, dom: &[u8]) -> MixedGraph {
        let mut edges = Vec::new();
        let mut arcs = Vec::new();
        for (&(lo, hi), &d) in self.g.edges().iter().zip(dom) {
            match d {
                KEPT => edges.push((lo, hi)),
                FWD => arcs.push((lo, hi)),
                REV => arcs.push((hi, lo)),
                _ => unreachable!("undecided edge in a solution"),
            }
        }
        MixedGraph::new(self.g.n(), edges, arcs).expect("one adjacency per edge")
    }

    // bit of edge e for the arc whose tail is `tail`
    #[inline]
    fn arc_bit(&self, e: usize, tail: usize) -> u8 {
        if self.g.edges()[e].0 == tail {
            FWD
        } else {
            REV
        }
    }

    #[inline]
    fn head_bit(&self, e: usize, head: usize) -> u8 {
        if self.g.edges()[e].1 == head {
            FWD
        } else {
            REV
        }
    }

    // Number of 2-dipath supports still possible for edge e, capped at 2, and the
    // first one found as (first edge bit, second edge bit, index).
    fn live_supports(&self, dom: &[u8], e: usize) -> (usize, Option<(u8, u8, usize)>) {
        let (a, _) = self.g.edges()[e];
        let mut count = 0;
        let mut first = None;
        for (k, s) in self.supports[e].iter().enumerate() {
            let w = s.centre;
            for (x, y) in [(self.arc_bit(s.first, a), self.arc_bit(s.second, w)), (self.head_bit(s.first, a), self.head_bit(s.second, w))] {
                if dom[s.first] & x != 0 && dom[s.second] & y != 0 {
                    count += 1;
                    if first.is_none() {
                        first = Some((x, y, k));
                    }
                    if count >= 2 {
                        return (count, first);
                    }
                }
            }
        }
        (count, first)
    }

    /// Runs both constraint families to a fixpoint starting from `queue`.
    /// Returns false on a wipe-out.
    fn propagate(&self, dom: &mut [u8], mut queue: Vec<usize>) -> bool {
        let mut queued = vec![false; dom.len()];
        queue.iter().for_each(|&e| queued[e] = true);
        let mut recheck: Vec<usize> = Vec::new();
        while let Some(e) = queue.pop() {
            queued[e] = false;
            if dom[e] == 0 {
                return false;
            }
            let mut changed: Vec<usize> = Vec::new();
            for &(f, w) in &self.conflicts[e] {
                let (e_in, e_out) = (self.head_bit(e, w), self.arc_bit(e, w));
                let (f_in, f_out) = (self.head_bit(f, w), self.arc_bit(f, w));
                let mut keep = dom[f];
                if dom[e] & (KEPT | e_out) == 0 {
                    keep &= !f_out;
                }
                if dom[e] & (KEPT | e_in) == 0 {
                    keep &= !f_in;
                }
                if keep != dom[f] {
                    dom[f] = keep;
                    if keep == 0 {
                        return false;
                    }
                    changed.push(f);
                }
            }
            recheck.clear();
            recheck.push(e);
            recheck.extend_from_slice(&self.covered_by[e]);
            for &c in &recheck {
                if dom[c] & KEPT == 0 {
                    continue;
                }
                let (count, first) = self.live_supports(dom, c);
                if count == 0 {
                    dom[c] &= !KEPT;
                    if dom[c] == 0 {
                        return false;
                    }
                    changed.push(c);
                } else if count == 1 && dom[c] == KEPT {
                    let (x, y, k) = first.unwrap();
                    let s = &self.supports[c][k];
                    for (edge, bit) in [(s.first, x), (s.second, y)] {
                        if dom[edge] != bit {
                            dom[edge] = bit;
                            changed.push(edge);
                        }
                    }
                }
            }
            for f in changed {
                if !queued[f] {
                    queued[f] = true;
                    queue.push(f);
                }
            }
        }
        true
    }

    /// Groups the undecided edges among `scope` that share a live constraint.
    fn groups(&self, dom: &[u8], scope: &[usize]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..dom.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        fn union(p: &mut [usize], a: usize, b: usize) {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
            }
        }
        let open = |e: usize| dom[e].count_ones() > 1;
        for &e in scope {
            if open(e) {
                for &(f, w) in &self.conflicts[e] {
                    if !open(f) {
                        continue;
                    }
                    let clash = (dom[e] & self.head_bit(e, w) != 0 && dom[f] & self.arc_bit(f, w) != 0)
                        || (dom[e] & self.arc_bit(e, w) != 0 && dom[f] & self.head_bit(f, w) != 0);
                    if clash {
                        union(&mut parent, e, f);
                    }
                }
            }
        }
        // coverage constraints, including those of decided kept edges
        let mut seen = vec![false; dom.len()];
        for &e in scope {
            let mut touch = vec![e];
            touch.extend_from_slice(&self.covered_by[e]);
            for c in touch {
                if seen[c] || dom[c] & KEPT == 0 {
                    continue;
                }
                seen[c] = true;
                let (a, _) = self.g.edges()[c];
                let mut members: Vec<usize> = Vec::new();
                let mut satisfied = false;
                for s in &self.supports[c] {
                    let w = s.centre;
                    for (x, y) in [(self.arc_bit(s.first, a), self.arc_bit(s.second, w)), (self.head_bit(s.first, a), self.head_bit(s.second, w))] {
                        if dom[s.first] & x != 0 && dom[s.second] & y != 0 {
                            if dom[s.first] == x && dom[s.second] == y {
                                satisfied = true;
                            }
                            members.extend([s.first, s.second].into_iter().filter(|&f| open(f)));
                        }
                    }
                }
                if dom[c] == KEPT && satisfied {
                    continue;
                }
                if open(c) {
                    members.push(c);
                }
                for pair in members.windows(2) {
                    union(&mut parent, pair[0], pair[1]);
                }
            }
        }
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &e in scope {
            if open(e) {
                let r = find(&mut parent, e);
                by_root.entry(r).or_default().push(e);
            }
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        out.sort_by_key(|g| (g.len(), g[0]));
        out
    }
}

impl Run<'_, '_> {
    fn tick(&self) -> Result<(), SolverError> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.opts.node_limit {
            Some(limit) if n > limit => Err(SolverError::BudgetExceeded { nodes: limit }),
            _ => Ok(()),
        }
    }

    // Solves all undecided edges in `scope`; edges outside it are left alone.
    fn solve_group(&self, dom: Vec<u8>, scope: &[usize]) -> Result<Option<Vec<u8>>, SolverError> {
        if !self.opts.decompose {
            let open: Vec<usize> = scope.iter().copied().filter(|&e| dom[e].count_ones() > 1).collect();
            return if open.is_empty() { Ok(Some(dom)) } else { self.branch(dom, &open) };
        }
        let groups = self.solver.groups(&dom, scope);
        match groups.len() {
            0 => Ok(Some(dom)),
            1 => self.branch(dom, &groups[0]),
            _ => {
                let solve_one = |grp: &Vec<usize>| self.branch(dom.clone(), grp);
                let results: Vec<Result<Option<Vec<u8>>, SolverError>> = if self.opts.threads > 1 {
                    groups.par_iter().map(solve_one).collect()
                } else {
                    // sequential: stop at the first failing group
                    let mut acc = Vec::with_capacity(groups.len());
                    for grp in &groups {
                        let r = solve_one(grp);
                        let stop = !matches!(r, Ok(Some(_)));
                        acc.push(r);
                        if stop {
                            break;
                        }
                    }
                    acc
                };
                let mut merged = dom;
                for (grp, r) in groups.iter().zip(results) {
                    match r? {
                        Some(sol) => grp.iter().for_each(|&e| merged[e] = sol[e]),
                        None => return Ok(None),
                    }
                }
                Ok(Some(merged))
            }
        }
    }

    fn branch(&self, dom: Vec<u8>, scope: &[usize]) -> Result<Option<Vec<u8>>, SolverError> {
        let pick = scope
            .iter()
            .copied()
            .filter(|&e| dom[e].count_ones() > 1)
            .min_by_key(|&e| (dom[e].count_ones(), e));
        let Some(e) = pick else { return Ok(Some(dom)) };
        for value in VALUE_ORDER {
            if dom[e] & value == 0 {
                continue;
            }
            self.tick()?;
            let mut next = dom.clone();
            next[e] = value;
            if !self.solver.propagate(&mut next, vec![e]) {
                continue;
            }
            if let Some(sol) = self.solve_group(next, scope)? {
                return Ok(Some(sol));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named;
    use crate::qt::{enumerate_qt, verify_witness, vertex_status, VertexStatus};

    fn yes(g: &Graph) -> bool {
        let w = decide_qt(g, &SolveOptions::default()).unwrap();
        if let Some(p) = &w {
            assert_eq!(verify_witness(g, p.mixed()), Ok(()));
        }
        w.is_some()
    }

    #[test]
    fn known_answers() {
        assert!(!yes(&named::cycle(5)));
        assert!(!yes(&named::pi()));
        assert!(!yes(&named::prism()));
        assert!(yes(&named::complete(5)));
        assert!(yes(&named::complete(4)));
        assert!(yes(&named::cycle(6)));
        assert!(yes(&Graph::empty(4)));
        assert!(!yes(&named::petersen()));
    }

    #[test]
    fn agrees_with_enumeration_on_small_graphs() {
        for g in crate::corpus::connected_graphs(6, |_| true) {
            if g.edge_count() > 12 {
                continue;
            }
            let expected = enumerate_qt(&g).unwrap().next().is_some();
            for decompose in [true, false] {
                let opts = SolveOptions { decompose, ..Default::default() };
                assert_eq!(decide_qt(&g, &opts).unwrap().is_some(), expected, "{:?}", g.edges());
            }
        }
    }

    #[test]
    fn budget_is_reported_separately() {
        let opts = SolveOptions { node_limit: Some(1), ..Default::default() };
        assert_eq!(
            decide_qt(&named::complete(6), &opts),
            Err(SolverError::BudgetExceeded { nodes: 1 })
        );
    }

    #[test]
    fn threads_do_not_change_the_witness() {
        let g = crate::nae::build_reduction(&crate::nae::CnfInstance::new(4, vec![[0, 1, 2], [1, 2, 3]]).unwrap())
            .unwrap()
            .0;
        let one = decide_qt(&g, &SolveOptions::default()).unwrap();
        let four = decide_qt(&g, &SolveOptions { threads: 4, ..Default::default() }).unwrap();
        assert!(one.is_some());
        assert_eq!(one, four);
    }

    #[test]
    fn polarity_requirements_are_honoured() {
        let g = named::path(3);
        let mut s = Solver::new(&g);
        s.require(1, Polarity::Source);
        let w = s.solve(&SolveOptions::default()).unwrap().witness.unwrap();
        assert_eq!(vertex_status(w.mixed(), 1), VertexStatus::Source);
        let mut s = Solver::new(&g);
        s.require(1, Polarity::Source).require(0, Polarity::Source);
        assert!(s.solve(&SolveOptions::default()).unwrap().witness.is_none());
    }
}
