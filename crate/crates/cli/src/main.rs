use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod error;

#[derive(Parser, Debug)]
#[command(name = "quasisquare", version, about = "Recognise undirected squares of oriented graphs")]
struct Cli {
    /// Print a JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the exact search.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    threads: u64,

    /// Abort the exact search after this many branching nodes (exit code 3).
    #[arg(long, global = true)]
    node_limit: Option<u64>,

    /// Accepted for reproducible invocations; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph has a quasi-transitive partial orientation.
    Decide {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Write the orientation found to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Write the orientation found as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a mixed graph against a graph.
    Verify { graph: PathBuf, witness: PathBuf },
    /// Directed square of a mixed graph.
    Square {
        mixed: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Embed a graph as an induced subgraph of an oriented graph square.
    Embed {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the oriented root whose square is the output.
        #[arg(long)]
        root: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Encode a monotone NAE 3-SAT instance (DIMACS) as a graph.
    Reduce {
        cnf: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
        /// Omit the degree-one gadget vertices.
        #[arg(long)]
        drop_pendants: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Read a truth assignment off an orientation of a reduction graph.
    Extract { map: PathBuf, witness: PathBuf },
    /// Report the signatures realised by the clause gadget.
    Gadget {
        #[arg(long)]
        signatures: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Exact,
    Deg3,
    Girth4,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

impl Cli {
    fn solve_options(&self) -> quasisquare::qt::SolveOptions {
        quasisquare::qt::SolveOptions {
            node_limit: self.node_limit,
            threads: self.threads as usize,
            ..Default::default()
        }
    }
}
