#![allow(dead_code)]

use quasisquare::graph::{
    cut_vertices, edge_subgraph, has_odd_cycle, independent_vertex_cuts, mixed_square, triangle_free_edges, Graph,
    VertexCut, DEFAULT_CUT_SIZE,
};
use quasisquare::corpus::canonical_form;
use quasisquare::nae::CnfInstance;
use quasisquare::poly::{is_removable, reduce_removable};
use quasisquare::qt::{is_qt, vertex_status, PartialOrientation, VertexStatus};
use rand::Rng;

fn source_or_sink(s: VertexStatus) -> bool {
    matches!(s, VertexStatus::Source | VertexStatus::Sink)
}

fn touches_arc(m: &quasisquare::MixedGraph, v: usize) -> bool {
    !m.out_neighbors(v).is_empty() || !m.in_neighbors(v).is_empty()
}

/// Per-graph data shared by all orientations of one graph.
pub struct Facts {
    free: Vec<(usize, usize)>,
    free_has_odd_cycle: bool,
    cut_vertices: Vec<usize>,
    cuts: Vec<VertexCut>,
}

impl Facts {
    pub fn new(g: &Graph) -> Self {
        let free = triangle_free_edges(g);
        Facts {
            free_has_odd_cycle: has_odd_cycle(&edge_subgraph(g, &free).unwrap().graph).is_some(),
            free: free.iter().collect(),
            cut_vertices: cut_vertices(g),
            cuts: independent_vertex_cuts(g, DEFAULT_CUT_SIZE),
        }
    }
}

/// Every structural statement that must hold for a quasi-transitive partial
/// orientation `o` of `g`; returns a description of each one that fails.
pub fn structural_violations(g: &Graph, o: &PartialOrientation) -> Vec<String> {
    violations_with(&Facts::new(g), o)
}

pub fn violations_with(facts: &Facts, o: &PartialOrientation) -> Vec<String> {
    let m = o.mixed();
    let mut bad = Vec::new();
    for &(u, v) in &facts.free {
        if !(m.has_arc(u, v) || m.has_arc(v, u)) {
            bad.push(format!("triangle-free edge {u}-{v} kept"));
        }
        for x in [u, v] {
            if !source_or_sink(vertex_status(m, x)) {
                bad.push(format!("end {x} of triangle-free edge {u}-{v} is {:?}", vertex_status(m, x)));
            }
        }
    }
    if facts.free_has_odd_cycle {
        bad.push("triangle-free edges contain an odd cycle".into());
    }
    for &x in &facts.cut_vertices {
        if touches_arc(m, x) && !source_or_sink(vertex_status(m, x)) {
            bad.push(format!("cut vertex {x} is {:?}", vertex_status(m, x)));
        }
    }
    for cut in &facts.cuts {
        for &x in &cut.cut {
            if touches_arc(m, x) && !source_or_sink(vertex_status(m, x)) {
                bad.push(format!("cut {:?} vertex {x} is {:?}", cut.cut, vertex_status(m, x)));
            }
        }
        for side in [&cut.side_a, &cut.side_b] {
            let mut keep: Vec<usize> = side.iter().chain(&cut.cut).copied().collect();
            keep.sort_unstable();
            let part = m.induced(&keep);
            if let Err(e) = is_qt(&part) {
                bad.push(format!("restriction to {keep:?} fails: {e}"));
            }
            for (i, &x) in keep.iter().enumerate() {
                if cut.cut.contains(&x) && touches_arc(&part, i) && !source_or_sink(vertex_status(&part, i)) {
                    bad.push(format!("cut vertex {x} is {:?} inside {keep:?}", vertex_status(&part, i)));
                }
            }
        }
    }
    if mixed_square(&m.arcs_only()) != *m {
        bad.push("square of the arcs differs from the orientation".into());
    }
    let sq = mixed_square(m);
    if mixed_square(&sq) != sq {
        bad.push("square is not idempotent".into());
    }
    bad
}

/// Removable-vertex statements for a graph of maximum degree at most three.
/// `decide` answers whether a graph admits an orientation.
pub fn removability_violations(g: &Graph, decide: impl Fn(&Graph) -> bool) -> Vec<String> {
    let mut bad = Vec::new();
    let removable: Vec<usize> = (0..g.n()).filter(|&u| is_removable(g, u).unwrap()).collect();
    if removable.is_empty() {
        return bad;
    }
    let here = decide(g);
    for &u in &removable {
        let sub = g.remove_vertices(&[u]);
        if decide(&sub.graph) != here {
            bad.push(format!("removing {u} changes the answer"));
        }
        let after: Vec<usize> =
            (0..sub.graph.n()).filter(|&x| is_removable(&sub.graph, x).unwrap()).map(|x| sub.original[x]).collect();
        let expected: Vec<usize> = removable.iter().copied().filter(|&x| x != u).collect();
        if after != expected {
            bad.push(format!("removing {u} leaves removable set {after:?}, expected {expected:?}"));
        }
    }
    let (all_at_once, _) = reduce_removable(g).unwrap();
    let mut one_by_one = g.clone();
    let mut steps = 0;
    while let Some(x) = (0..one_by_one.n()).find(|&x| is_removable(&one_by_one, x).unwrap()) {
        one_by_one = one_by_one.remove_vertices(&[x]).graph;
        steps += 1;
    }
    if steps != removable.len() || canonical_form(&one_by_one) != canonical_form(&all_at_once) {
        bad.push("sequential removal ends in a different graph".into());
    }
    bad
}

/// Random monotone instance with `clauses` clauses over `vars` variables.
pub fn random_instance(rng: &mut impl Rng, vars: usize, clauses: usize) -> CnfInstance {
    let cs = (0..clauses)
        .map(|_| {
            let mut c = [0usize; 3];
            let picked = rand::seq::index::sample(rng, vars, 3);
            for (slot, x) in c.iter_mut().zip(picked.iter()) {
                *slot = x;
            }
            c
        })
        .collect();
    CnfInstance::new(vars, cs).unwrap()
}

/// Every monotone instance with up to `max_clauses` clauses (repeats allowed,
/// order ignored) over variables `0..max_vars`.
pub fn small_instances(max_vars: usize, max_clauses: usize) -> Vec<CnfInstance> {
    let mut triples = Vec::new();
    for a in 0..max_vars {
        for b in a + 1..max_vars {
            for c in b + 1..max_vars {
                triples.push([a, b, c]);
            }
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(chosen) = stack.pop() {
        let cs: Vec<[usize; 3]> = chosen.iter().map(|&i| triples[i]).collect();
        let used = cs.iter().flatten().max().map_or(0, |&m| m + 1);
        out.push(CnfInstance::new(used, cs).unwrap());
        if chosen.len() < max_clauses {
            let start = chosen.last().copied().unwrap_or(0);
            for i in start..triples.len() {
                let mut next = chosen.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out
}
