use super::gadget::{clause_gadget, gadget_template, LITERALS, PENDANTS};
use super::{Assignment, CnfInstance, NaeError};
use crate::graph::{Graph, MixedGraph};
use crate::qt::{vertex_status, verify_witness, Signature, VertexStatus};
use std::fmt;

const DROPPABLE: [usize; 2] = [PENDANTS[0], PENDANTS[2]];

/// Whether the degree-one gadget vertices (the pendants of `u` and `w`) are
/// kept after the literal vertices are glued onto the variable paths.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PendantMode {
    #[default]
    Retain,
    Drop,
}

/// Vertex bookkeeping for a reduction graph.
///
/// Variable `x` owns the path `vars[x]` of `2|C| + 2` vertices; clause `k`
/// (0-based here, 1-based in text) places gadget vertex `i` at `gadgets[k][i]`,
/// and its literal vertices coincide with path vertex `2(k + 1)` of their
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMap {
    pub num_vertices: usize,
    pub mode: PendantMode,
    pub clauses: Vec<[usize; 3]>,
    pub vars: Vec<Vec<usize>>,
    pub gadgets: Vec<[Option<usize>; 9]>,
}

pub fn build_reduction(y: &CnfInstance) -> Result<(Graph, ReductionMap), NaeError> {
    build_reduction_with(y, PendantMode::Retain)
}

pub fn build_reduction_with(y: &CnfInstance, mode: PendantMode) -> Result<(Graph, ReductionMap), NaeError> {
    let y = CnfInstance::new(y.num_vars(), y.clauses().to_vec())?;
    let c = y.clauses().len();
    let len = 2 * c + 2;
    let vars: Vec<Vec<usize>> = (0..y.num_vars()).map(|x| (x * len..(x + 1) * len).collect()).collect();
    let mut next = y.num_vars() * len;
    let mut gadgets = Vec::with_capacity(c);
    let mut clauses = Vec::with_capacity(c);
    for (k, clause) in y.clauses().iter().enumerate() {
        let mut ids = [None; 9];
        for (role, &x) in clause.iter().enumerate() {
            ids[LITERALS[role]] = Some(vars[x][2 * (k + 1)]);
        }
        for (i, slot) in ids.iter_mut().enumerate() {
            if slot.is_none() && !(mode == PendantMode::Drop && DROPPABLE.contains(&i)) {
                *slot = Some(next);
                next += 1;
            }
        }
        clauses.push(LITERALS.map(|l| ids[l].unwrap()));
        gadgets.push(ids);
    }
    let rm = ReductionMap { num_vertices: next, mode, clauses, vars, gadgets };
    let g = rm.graph()?;
    Ok((g, rm))
}

impl ReductionMap {
    /// Rebuilds the reduction graph described by the map.
    pub fn graph(&self) -> Result<Graph, NaeError> {
        self.validate()?;
        let (gadget, _, _) = clause_gadget();
        let paths = self.vars.iter().flat_map(|p| p.windows(2).map(|w| (w[0], w[1])));
        let gadgets = self.gadgets.iter().flat_map(|ids| {
            gadget.edges().iter().filter_map(move |&(a, b)| Some((ids[a]?, ids[b]?)))
        });
        Graph::new(self.num_vertices, paths.chain(gadgets).collect::<Vec<_>>())
            .map_err(|e| NaeError::MapMismatch(e.to_string()))
    }

    fn validate(&self) -> Result<(), NaeError> {
        let bad = |msg: String| Err(NaeError::MapMismatch(msg));
        let c = self.clauses.len();
        if self.gadgets.len() != c {
            return bad(format!("{} clause lines but {} gadget lines", c, self.gadgets.len()));
        }
        let all_ids = self.vars.iter().flatten().chain(self.gadgets.iter().flatten().flatten());
        if let Some(id) = all_ids.clone().find(|&&id| id >= self.num_vertices) {
            return bad(format!("vertex {id} is not below {}", self.num_vertices));
        }
        let mut owner = vec![false; self.num_vertices];
        for p in &self.vars {
            if p.len() != 2 * c + 2 {
                return bad(format!("path has {} vertices, expected {}", p.len(), 2 * c + 2));
            }
        }
        for &id in self.vars.iter().flatten() {
            if std::mem::replace(&mut owner[id], true) {
                return bad(format!("vertex {id} appears twice"));
            }
        }
        for (k, (lits, ids)) in self.clauses.iter().zip(&self.gadgets).enumerate() {
            for (role, &l) in lits.iter().enumerate() {
                if ids[LITERALS[role]] != Some(l) {
                    return bad(format!("clause {} literal {l} is not its gadget vertex", k + 1));
                }
                if !self.vars.iter().any(|p| p[2 * (k + 1)] == l) {
                    return bad(format!("clause {} literal {l} is not path vertex {}", k + 1, 2 * (k + 1)));
                }
            }
            for (i, id) in ids.iter().enumerate() {
                match id {
                    None if !DROPPABLE.contains(&i) || self.mode == PendantMode::Retain => {
                        return bad(format!("clause {} lacks gadget vertex {i}", k + 1));
                    }
                    Some(id) if !LITERALS.contains(&i) && std::mem::replace(&mut owner[*id], true) => {
                        return bad(format!("vertex {id} appears twice"));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Parses the line format produced by `Display`.
    pub fn parse(text: &str) -> Result<Self, NaeError> {
        let mut rm = ReductionMap { num_vertices: 0, mode: PendantMode::Retain, clauses: vec![], vars: vec![], gadgets: vec![] };
        let mut clause_lines = Vec::new();
        let mut gadget_lines = Vec::new();
        let mut var_lines = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: &str| NaeError::Syntax { line: line_no, msg: msg.to_string() };
            let f: Vec<&str> = line.split_whitespace().collect();
            let Some((&kind, rest)) = f.split_first() else { continue };
            let num = |t: &str| t.parse::<usize>().map_err(|_| err(&format!("bad number `{t}`")));
            match kind {
                "c" => {}
                "n" => rm.num_vertices = num(rest.first().ok_or_else(|| err("missing count"))?)?,
                "pendants" => {
                    rm.mode = match rest {
                        ["retain"] => PendantMode::Retain,
                        ["drop"] => PendantMode::Drop,
                        _ => return Err(err("expected `pendants retain|drop`")),
                    }
                }
                "clause" => {
                    let v: Vec<usize> = rest.iter().map(|t| num(t)).collect::<Result<_, _>>()?;
                    let [k, a, b, c] = v[..] else { return Err(err("expected `clause <k> <u> <v> <w>`")) };
                    clause_lines.push((k, [a, b, c]));
                }
                "var" => {
                    let v: Vec<usize> = rest.iter().map(|t| num(t)).collect::<Result<_, _>>()?;
                    let Some((&x, ids)) = v.split_first() else { return Err(err("expected `var <x> <ids>`")) };
                    var_lines.push((x, ids.to_vec()));
                }
                "gadget" => {
                    if rest.len() != 10 {
                        return Err(err("expected `gadget <k>` and nine ids"));
                    }
                    let k = num(rest[0])?;
                    let mut ids = [None; 9];
                    for (slot, t) in ids.iter_mut().zip(&rest[1..]) {
                        *slot = if *t == "-" { None } else { Some(num(t)?) };
                    }
                    gadget_lines.push((k, ids));
                }
                other => return Err(err(&format!("unknown record `{other}`"))),
            }
        }
        let ordered = |ks: Vec<usize>, what: &str| -> Result<(), NaeError> {
            if ks.iter().enumerate().all(|(i, &k)| k == i + 1) {
                Ok(())
            } else {
                Err(NaeError::MapMismatch(format!("{what} lines must be numbered 1, 2, ... in order")))
            }
        };
        ordered(clause_lines.iter().map(|l| l.0).collect(), "clause")?;
        ordered(gadget_lines.iter().map(|l| l.0).collect(), "gadget")?;
        ordered(var_lines.iter().map(|l| l.0).collect(), "var")?;
        rm.clauses = clause_lines.into_iter().map(|l| l.1).collect();
        rm.gadgets = gadget_lines.into_iter().map(|l| l.1).collect();
        rm.vars = var_lines.into_iter().map(|l| l.1).collect();
        rm.validate()?;
        Ok(rm)
    }
}

impl fmt::Display for ReductionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.num_vertices)?;
        let mode = match self.mode {
            PendantMode::Retain => "retain",
            PendantMode::Drop => "drop",
        };
        writeln!(f, "pendants {mode}")?;
        for (k, [u, v, w]) in self.clauses.iter().enumerate() {
            writeln!(f, "clause {} {u} {v} {w}", k + 1)?;
        }
        for (x, p) in self.vars.iter().enumerate() {
            write!(f, "var {}", x + 1)?;
            for id in p {
                write!(f, " {id}")?;
            }
            writeln!(f)?;
        }
        for (k, ids) in self.gadgets.iter().enumerate() {
            write!(f, "gadget {}", k + 1)?;
            for id in ids {
                match id {
                    Some(id) => write!(f, " {id}")?,
                    None => write!(f, " -")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Orientation of the reduction graph induced by a not-all-equal assignment:
/// alternating paths with `x_0` a source iff `f(x)` holds, and a stored gadget
/// orientation per clause matching its truth pattern.
pub fn assignment_to_witness(y: &CnfInstance, f: &Assignment, rm: &ReductionMap) -> Result<MixedGraph, NaeError> {
    if f.len() != y.num_vars() {
        return Err(NaeError::AssignmentSize { found: f.len(), expected: y.num_vars() });
    }
    if rm.vars.len() != y.num_vars() || rm.clauses.len() != y.clauses().len() {
        return Err(NaeError::MapMismatch("variable or clause count differs".into()));
    }
    for (k, (clause, lits)) in y.clauses().iter().zip(&rm.clauses).enumerate() {
        if (0..3).any(|r| rm.vars[clause[r]][2 * (k + 1)] != lits[r]) {
            return Err(NaeError::MapMismatch(format!("clause {} is wired to other variables", k + 1)));
        }
    }
    if let Some(clause) = y.first_constant_clause(f) {
        return Err(NaeError::NotNae { clause });
    }
    let g = rm.graph()?;
    let mut arcs = Vec::new();
    let mut edges = Vec::new();
    for (x, p) in rm.vars.iter().enumerate() {
        for (i, w) in p.windows(2).enumerate() {
            arcs.push(if (i % 2 == 0) == f.get(x) { (w[0], w[1]) } else { (w[1], w[0]) });
        }
    }
    for (clause, ids) in y.clauses().iter().zip(&rm.gadgets) {
        let template = gadget_template(Signature(clause.map(|x| f.get(x)))).expect("non-constant signature");
        let place = |a: usize, b: usize| Some((ids[a]?, ids[b]?));
        arcs.extend(template.arcs().iter().filter_map(|&(a, b)| place(a, b)));
        edges.extend(template.edges().iter().filter_map(|&(a, b)| place(a, b)));
    }
    let m = MixedGraph::new(rm.num_vertices, edges, arcs).map_err(|e| NaeError::MapMismatch(e.to_string()))?;
    verify_witness(&g, &m)?;
    Ok(m)
}

/// Reads `f(x)` off the status of the first vertex of each variable path.
pub fn witness_to_assignment(rm: &ReductionMap, m: &MixedGraph) -> Result<Assignment, NaeError> {
    let g = rm.graph()?;
    verify_witness(&g, m)?;
    rm.vars
        .iter()
        .enumerate()
        .map(|(var, p)| match vertex_status(m, p[0]) {
            VertexStatus::Source => Ok(true),
            VertexStatus::Sink => Ok(false),
            _ => Err(NaeError::UndecidedVariable { var, vertex: p[0] }),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Assignment)
}
