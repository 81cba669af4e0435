//! Polynomial-time structure: removable vertices, the forbidden graph Π, the
//! maximum-degree-three and girth-four decisions, and the universal embedding.

mod deg3;
mod embed;
mod removable;

pub use deg3::{decide_deg3, decide_deg3_with_work, deg3_witness, detect_pi, PiEmbedding};
pub use embed::{decide_girth4, embed_universal};
pub use removable::{is_removable, reduce_removable, reinsert_removable, RemovalStep, RemovalTrace};

use crate::graph::Graph;
use crate::qt::{SolverError, WitnessError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("maximum degree {found} exceeds {bound}")]
    DegreeBound { found: usize, bound: usize },
    #[error("graph has girth 3")]
    GirthThree,
    #[error("invalid witness: {0}")]
    InvalidWitness(WitnessError),
    #[error("removal trace does not fit the witness: {0}")]
    TraceInconsistent(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("structural test and exact search disagree")]
    Disagreement,
}

pub(crate) fn require_max_degree_3(g: &Graph) -> Result<(), PolyError> {
    let found = g.max_degree();
    if found > 3 {
        return Err(PolyError::DegreeBound { found, bound: 3 });
    }
    Ok(())
}
