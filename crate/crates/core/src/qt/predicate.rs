use crate::graph::{underlying, Graph, MixedGraph};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// How the arcs at a vertex are directed. Kept edges do not count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexStatus {
    /// At least one arc, all outgoing.
    Source,
    /// At least one arc, all incoming.
    Sink,
    /// No incident arcs.
    ArcFree,
    /// Both incoming and outgoing arcs.
    Internal,
}

pub fn vertex_status(m: &MixedGraph, v: usize) -> VertexStatus {
    match (m.in_neighbors(v).is_empty(), m.out_neighbors(v).is_empty()) {
        (true, true) => VertexStatus::ArcFree,
        (true, false) => VertexStatus::Source,
        (false, true) => VertexStatus::Sink,
        (false, false) => VertexStatus::Internal,
    }
}

/// Why a mixed graph fails to be quasi-transitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Error)]
pub enum QtViolation {
    /// Arcs `u -> w -> v` with `u` and `v` non-adjacent.
    #[error("violation induced-2-dipath {0} {1} {2}")]
    InducedTwoDipath(usize, usize, usize),
    /// Edge `{u, v}` whose ends are joined by no 2-dipath.
    #[error("violation uncovered-edge {0} {1}")]
    UncoveredEdge(usize, usize),
}

/// Checks both quasi-transitivity conditions. Centres are scanned in increasing
/// order before edges, so the reported violation is deterministic.
pub fn is_qt(m: &MixedGraph) -> Result<(), QtViolation> {
    for w in 0..m.n() {
        for &u in m.in_neighbors(w) {
            for &v in m.out_neighbors(w) {
                if u != v && !m.adjacent(u, v) {
                    return Err(QtViolation::InducedTwoDipath(u, w, v));
                }
            }
        }
    }
    for &(u, v) in m.edges() {
        if !has_two_dipath(m, u, v) && !has_two_dipath(m, v, u) {
            return Err(QtViolation::UncoveredEdge(u, v));
        }
    }
    Ok(())
}

fn has_two_dipath(m: &MixedGraph, from: usize, to: usize) -> bool {
    m.out_neighbors(from).iter().any(|&w| m.has_arc(w, to))
}

/// A graph together with a mixed graph whose underlying graph it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation {
    base: Graph,
    mixed: MixedGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness has {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("pair {{{0}, {1}}} is an edge of the graph but absent from the witness")]
    MissingPair(usize, usize),
    #[error("pair {{{0}, {1}}} appears in the witness but is not an edge of the graph")]
    ExtraPair(usize, usize),
    #[error(transparent)]
    Violation(#[from] QtViolation),
}

fn check_underlying(g: &Graph, m: &MixedGraph) -> Result<(), WitnessError> {
    if g.n() != m.n() {
        return Err(WitnessError::VertexCount { expected: g.n(), found: m.n() });
    }
    let u = underlying(m);
    if let Some(&(a, b)) = g.edges().iter().find(|&&(a, b)| !u.has_edge(a, b)) {
        return Err(WitnessError::MissingPair(a, b));
    }
    if let Some(&(a, b)) = u.edges().iter().find(|&&(a, b)| !g.has_edge(a, b)) {
        return Err(WitnessError::ExtraPair(a, b));
    }
    Ok(())
}

impl PartialOrientation {
    /// Pairs `base` with `mixed` when `underlying(mixed) == base`. The mixed graph
    /// need not be quasi-transitive.
    pub fn new(base: Graph, mixed: MixedGraph) -> Result<Self, WitnessError> {
        check_underlying(&base, &mixed)?;
        Ok(PartialOrientation { base, mixed })
    }

    pub(crate) fn new_unchecked(base: Graph, mixed: MixedGraph) -> Self {
        debug_assert!(check_underlying(&base, &mixed).is_ok());
        PartialOrientation { base, mixed }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn mixed(&self) -> &MixedGraph {
        &self.mixed
    }

    pub fn into_mixed(self) -> MixedGraph {
        self.mixed
    }

    pub fn status(&self, v: usize) -> VertexStatus {
        vertex_status(&self.mixed, v)
    }

    pub fn is_qt(&self) -> Result<(), QtViolation> {
        is_qt(&self.mixed)
    }
}

/// `Ok` iff `underlying(m) == g` and `m` is quasi-transitive.
pub fn verify_witness(g: &Graph, m: &MixedGraph) -> Result<(), WitnessError> {
    check_underlying(g, m)?;
    is_qt(m)?;
    Ok(())
}

/// Source/sink pattern of three designated vertices; `true` means source (`+`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature(pub [bool; 3]);

impl Signature {
    pub fn all() -> impl Iterator<Item = Signature> {
        (0..8u8).map(|b| Signature([b & 4 != 0, b & 2 != 0, b & 1 != 0]))
    }

    pub fn complement(self) -> Signature {
        Signature(self.0.map(|s| !s))
    }

    pub fn is_constant(self) -> bool {
        self.0[0] == self.0[1] && self.0[1] == self.0[2]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            f.write_str(if s { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Signature {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 3 {
            return Err(format!("signature `{s}` must have three symbols"));
        }
        let mut out = [false; 3];
        for (slot, c) in out.iter_mut().zip(chars) {
            *slot = match c {
                '+' => true,
                '-' => false,
                _ => return Err(format!("signature `{s}` may only contain + and -")),
            };
        }
        Ok(Signature(out))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("vertex {vertex} is {status:?}, not a source or a sink")]
pub struct SignatureError {
    pub vertex: usize,
    pub status: VertexStatus,
}

/// Signature of `triple` in `m`: `+` for a source, `-` for a sink.
pub fn signature(m: &MixedGraph, triple: [usize; 3]) -> Result<Signature, SignatureError> {
    let mut out = [false; 3];
    for (slot, &v) in out.iter_mut().zip(&triple) {
        *slot = match vertex_status(m, v) {
            VertexStatus::Source => true,
            VertexStatus::Sink => false,
            status => return Err(SignatureError { vertex: v, status }),
        };
    }
    Ok(Signature(out))
}
