use std::fs;
use std::path::{Path, PathBuf};

use quasisquare::graph::{
    girth, graph_to_dot, mixed_square, mixed_to_dot, parse_graph, parse_mixed, write_graph, write_mixed, Graph,
    MixedGraph,
};
use quasisquare::nae::{
    build_reduction_with, gadget_signature_set, parse_dimacs, witness_to_assignment, NaeError, PendantMode,
    ReductionMap,
};
use quasisquare::poly::{decide_deg3, decide_girth4, deg3_witness, embed_universal};
use quasisquare::qt::{decide_qt, verify_witness, PartialOrientation, Signature, WitnessError};
use serde::Serialize;

use crate::error::CliError;
use crate::{Cli, Command, Method};

type Outcome = Result<u8, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn load_mixed(path: &Path) -> Result<MixedGraph, CliError> {
    parse_mixed(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn emit_json<T: Serialize>(report: &T) {
    println!("{}", serde_json::to_string_pretty(report).expect("reports serialise"));
}

/// Writes `text` to `path`, or to stdout when no path is given and JSON
/// output is off.
fn deliver(cli: &Cli, path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, text),
        None if !cli.json => {
            print!("{text}");
            Ok(())
        }
        None => Ok(()),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Decide { graph, method, witness, dot } => decide(cli, graph, *method, witness.as_ref(), dot.as_ref()),
        Command::Verify { graph, witness } => verify(cli, graph, witness),
        Command::Square { mixed, output, dot } => square(cli, mixed, output.as_ref(), dot.as_ref()),
        Command::Embed { graph, output, root, dot } => embed(cli, graph, output.as_ref(), root.as_ref(), dot.as_ref()),
        Command::Reduce { cnf, output, map, drop_pendants, dot } => {
            reduce(cli, cnf, output.as_ref(), map.as_ref(), *drop_pendants, dot.as_ref())
        }
        Command::Extract { map, witness } => extract(cli, map, witness),
        Command::Gadget { signatures } => gadget(cli, *signatures),
    }
}

#[derive(Serialize)]
struct DecideReport {
    answer: &'static str,
    method: &'static str,
    vertices: usize,
    edges: usize,
    witness: Option<PathBuf>,
}

fn pick_method(g: &Graph, requested: Method) -> Method {
    match requested {
        Method::Auto if g.max_degree() <= 3 => Method::Deg3,
        Method::Auto if girth(g).is_none_or(|k| k >= 4) => Method::Girth4,
        Method::Auto => Method::Exact,
        m => m,
    }
}

fn decide(cli: &Cli, path: &Path, requested: Method, witness: Option<&PathBuf>, dot: Option<&PathBuf>) -> Outcome {
    let g = load_graph(path)?;
    let method = pick_method(&g, requested);
    let wants_witness = witness.is_some() || dot.is_some();
    let opts = cli.solve_options();
    let (yes, found): (bool, Option<PartialOrientation>) = match method {
        Method::Deg3 if wants_witness => {
            let w = deg3_witness(&g, &opts)?;
            (w.is_some(), w)
        }
        Method::Deg3 => (decide_deg3(&g)?, None),
        Method::Girth4 => {
            let w = decide_girth4(&g)?;
            (w.is_some(), w)
        }
        Method::Exact | Method::Auto => {
            let w = decide_qt(&g, &opts)?;
            (w.is_some(), w)
        }
    };
    if let Some(w) = &found {
        if let Some(p) = witness {
            write(p, &write_mixed(w.mixed()))?;
        }
        if let Some(p) = dot {
            write(p, &mixed_to_dot(w.mixed()))?;
        }
    }
    let answer = if yes { "YES" } else { "NO" };
    let method_name = match method {
        Method::Deg3 => "deg3",
        Method::Girth4 => "girth4",
        _ => "exact",
    };
    if cli.json {
        emit_json(&DecideReport {
            answer,
            method: method_name,
            vertices: g.n(),
            edges: g.edge_count(),
            witness: witness.filter(|_| found.is_some()).cloned(),
        });
    } else {
        println!("{answer}");
    }
    Ok(if yes { 0 } else { 1 })
}

#[derive(Serialize)]
struct VerifyReport {
    valid: bool,
    problem: Option<String>,
}

fn verify(cli: &Cli, graph: &Path, witness: &Path) -> Outcome {
    let g = load_graph(graph)?;
    let m = load_mixed(witness)?;
    let problem = verify_witness(&g, &m).err().map(|e| match e {
        WitnessError::Violation(v) => v.to_string(),
        other => format!("mismatch {other}"),
    });
    if cli.json {
        emit_json(&VerifyReport { valid: problem.is_none(), problem: problem.clone() });
    } else {
        println!("{}", problem.as_deref().unwrap_or("OK"));
    }
    Ok(if problem.is_none() { 0 } else { 1 })
}

#[derive(Serialize)]
struct SizeReport {
    vertices: usize,
    edges: usize,
    arcs: usize,
    output: Option<PathBuf>,
}

fn square(cli: &Cli, path: &Path, output: Option<&PathBuf>, dot: Option<&PathBuf>) -> Outcome {
    let sq = mixed_square(&load_mixed(path)?);
    deliver(cli, output, &write_mixed(&sq))?;
    if let Some(p) = dot {
        write(p, &mixed_to_dot(&sq))?;
    }
    if cli.json {
        emit_json(&SizeReport { vertices: sq.n(), edges: sq.edges().len(), arcs: sq.arcs().len(), output: output.cloned() });
    }
    Ok(0)
}

fn embed(cli: &Cli, path: &Path, output: Option<&PathBuf>, root: Option<&PathBuf>, dot: Option<&PathBuf>) -> Outcome {
    let (big, oriented) = embed_universal(&load_graph(path)?);
    deliver(cli, output, &write_graph(&big))?;
    if let Some(p) = root {
        write(p, &write_mixed(&oriented))?;
    }
    if let Some(p) = dot {
        write(p, &graph_to_dot(&big))?;
    }
    if cli.json {
        emit_json(&SizeReport { vertices: big.n(), edges: big.edge_count(), arcs: 0, output: output.cloned() });
    }
    Ok(0)
}

#[derive(Serialize)]
struct ReduceReport {
    variables: usize,
    clauses: usize,
    vertices: usize,
    edges: usize,
    max_degree: usize,
    output: Option<PathBuf>,
    map: Option<PathBuf>,
}

fn reduce(
    cli: &Cli,
    path: &Path,
    output: Option<&PathBuf>,
    map: Option<&PathBuf>,
    drop_pendants: bool,
    dot: Option<&PathBuf>,
) -> Outcome {
    let y = parse_dimacs(&read(path)?).map_err(|source| CliError::Cnf { path: path.to_path_buf(), source })?;
    let mode = if drop_pendants { PendantMode::Drop } else { PendantMode::Retain };
    let (g, rm) = build_reduction_with(&y, mode).map_err(CliError::Nae)?;
    deliver(cli, output, &write_graph(&g))?;
    if let Some(p) = map {
        write(p, &rm.to_string())?;
    }
    if let Some(p) = dot {
        write(p, &graph_to_dot(&g))?;
    }
    if cli.json {
        emit_json(&ReduceReport {
            variables: y.num_vars(),
            clauses: y.clauses().len(),
            vertices: g.n(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
            output: output.cloned(),
            map: map.cloned(),
        });
    }
    Ok(0)
}

#[derive(Serialize)]
struct ExtractReport {
    assignment: Option<Vec<bool>>,
    problem: Option<String>,
}

fn extract(cli: &Cli, map: &Path, witness: &Path) -> Outcome {
    let rm = ReductionMap::parse(&read(map)?).map_err(|source| CliError::Cnf { path: map.to_path_buf(), source })?;
    let m = load_mixed(witness)?;
    match witness_to_assignment(&rm, &m) {
        Ok(f) => {
            if cli.json {
                emit_json(&ExtractReport { assignment: Some(f.0.clone()), problem: None });
            } else {
                print!("{f}");
            }
            Ok(0)
        }
        Err(e @ (NaeError::InvalidWitness(_) | NaeError::UndecidedVariable { .. })) => {
            if cli.json {
                emit_json(&ExtractReport { assignment: None, problem: Some(e.to_string()) });
            } else {
                println!("{e}");
            }
            Ok(1)
        }
        Err(e) => Err(CliError::Cnf { path: map.to_path_buf(), source: e }),
    }
}

#[derive(Serialize)]
struct GadgetReportJson {
    achievable: Vec<(String, usize)>,
    excluded: Vec<(String, usize)>,
    orientations: usize,
}

fn gadget(cli: &Cli, signatures: bool) -> Outcome {
    if !signatures {
        return Err(CliError::Usage("nothing to report; pass --signatures".into()));
    }
    let report = gadget_signature_set();
    let constant = [Signature([true; 3]), Signature([false; 3])];
    if cli.json {
        emit_json(&GadgetReportJson {
            achievable: report.achievable().map(|s| (s.to_string(), report.count(s))).collect(),
            excluded: constant.iter().map(|&s| (s.to_string(), report.count(s))).collect(),
            orientations: report.total,
        });
    } else {
        for s in report.achievable() {
            println!("signature {s} {}", report.count(s));
        }
        println!(
            "excluded: {} {}; counts: {} {}",
            constant[0],
            constant[1],
            report.count(constant[0]),
            report.count(constant[1])
        );
    }
    let expected: Vec<Signature> = Signature::all().filter(|s| !s.is_constant()).collect();
    Ok(if report.achievable().eq(expected) { 0 } else { 1 })
}
