//! Quasi-transitivity of mixed graphs: the predicate, brute-force enumeration
//! and the exact decision procedure.

mod enumerate;
mod predicate;
mod search;

pub use enumerate::{apply_choices, enumerate_qt, enumerate_qt_exhaustive, EdgeChoice, QtEnumerator, ENUMERATION_EDGE_CAP};
pub use predicate::{
    is_qt, signature, verify_witness, vertex_status, PartialOrientation, QtViolation, Signature, SignatureError,
    VertexStatus, WitnessError,
};
pub use search::{decide_qt, Polarity, SearchOutcome, SolveOptions, Solver};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {edges} edges; enumeration is capped at {cap}")]
    TooManyEdges { edges: usize, cap: usize },
    #[error("search budget of {nodes} nodes exceeded")]
    BudgetExceeded { nodes: u64 },
}
