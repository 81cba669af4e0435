use std::path::PathBuf;

use quasisquare::graph::ParseError;
use quasisquare::nae::NaeError;
use quasisquare::poly::PolyError;
use quasisquare::qt::SolverError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Cnf { path: PathBuf, source: NaeError },
    #[error("{0}")]
    Usage(String),
    #[error("search budget of {nodes} nodes exhausted")]
    Budget { nodes: u64 },
    #[error("{0}")]
    Solver(SolverError),
    #[error(transparent)]
    Poly(PolyError),
    #[error(transparent)]
    Nae(NaeError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget { .. } => 3,
            _ => 2,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::BudgetExceeded { nodes } => CliError::Budget { nodes },
            other => CliError::Solver(other),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Solver(s) => s.into(),
            PolyError::DegreeBound { .. } | PolyError::GirthThree => CliError::Usage(format!("method not applicable: {e}")),
            other => CliError::Poly(other),
        }
    }
}
