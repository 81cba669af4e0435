//! Monotone not-all-equal 3-SAT and its encoding as a graph instance.

mod cnf;
mod gadget;
mod reduction;

pub use cnf::{brute_nae, parse_dimacs, write_dimacs, Assignment, CnfInstance, BRUTE_FORCE_VARIABLE_CAP};
pub use gadget::{clause_gadget, gadget_signature_set, gadget_template, GadgetReport, LITERALS, PENDANTS};
pub use reduction::{assignment_to_witness, build_reduction, build_reduction_with, witness_to_assignment, PendantMode, ReductionMap};

use crate::qt::WitnessError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NaeError {
    #[error("clause {clause} repeats a variable")]
    RepeatedVariable { clause: usize },
    #[error("variable {var} out of range for {num_vars} variables")]
    VariableOutOfRange { var: usize, num_vars: usize },
    #[error("line {line}: negative literal {literal}; only monotone instances are supported")]
    NegativeLiteral { line: usize, literal: i64 },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{vars} variables exceed the brute-force cap of {cap}")]
    TooManyVariables { vars: usize, cap: usize },
    #[error("assignment covers {found} variables, instance has {expected}")]
    AssignmentSize { found: usize, expected: usize },
    #[error("clause {clause} is constant under the assignment")]
    NotNae { clause: usize },
    #[error("reduction map does not match the instance: {0}")]
    MapMismatch(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(#[from] WitnessError),
    #[error("path start {vertex} of variable {var} is neither a source nor a sink")]
    UndecidedVariable { var: usize, vertex: usize },
}
