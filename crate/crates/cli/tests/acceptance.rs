//! Acceptance harness: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{random_instance, removability_violations, small_instances, violations_with, Facts};
use quasisquare::corpus::{connected_graphs, random_connected_bounded, random_gnp, seeded_rng};
use quasisquare::graph::{bipartition, girth, mixed_square};
use quasisquare::nae::{
    assignment_to_witness, brute_nae, build_reduction, witness_to_assignment, CnfInstance,
};
use quasisquare::poly::{decide_deg3, decide_girth4, embed_universal, is_removable};
use quasisquare::qt::{decide_qt, enumerate_qt, verify_witness, SolveOptions, ENUMERATION_EDGE_CAP};
use quasisquare::Graph;
use rand::Rng;
use rayon::prelude::*;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn exact(g: &Graph) -> bool {
    decide_qt(g, &SolveOptions::default()).expect("no budget set").is_some()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quasisquare"))
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn gadget_signatures() -> Verdict {
    let start = Instant::now();
    let out = bin().args(["gadget", "--signatures"]).output().expect("binary runs");
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    let sigs: Vec<&str> = lines.iter().filter_map(|l| l.strip_prefix("signature ")).map(|l| &l[..3]).collect();
    let want = ["--+", "-+-", "-++", "+--", "+-+", "++-"];
    let ok = out.status.code() == Some(0)
        && sigs == want
        && lines.last() == Some(&"excluded: +++ ---; counts: 0 0")
        && elapsed < Duration::from_secs(60);
    verdict(ok, format!("{} achievable, constant counts 0 0, {elapsed:.1?}", sigs.len()))
}

fn degree_three() -> Verdict {
    let start = Instant::now();
    let corpus = connected_graphs(7, |g| g.max_degree() <= 3);
    let mut rng = seeded_rng(2024);
    let random: Vec<Graph> = (0..500)
        .map(|_| {
            let n = rng.gen_range(8..=10);
            let extra = rng.gen_range(0..=n);
            random_connected_bounded(&mut rng, n, 3, extra)
        })
        .collect();
    let mismatches: usize = corpus
        .par_iter()
        .map(|g| {
            let fast = decide_deg3(g).unwrap();
            usize::from(fast != enumerate_qt(g).unwrap().next().is_some() || fast != exact(g))
        })
        .sum::<usize>()
        + random.par_iter().map(|g| usize::from(decide_deg3(g).unwrap() != exact(g))).sum::<usize>();
    let elapsed = start.elapsed();
    verdict(
        mismatches == 0 && elapsed < Duration::from_secs(600),
        format!("{} exhaustive + {} random graphs, {mismatches} mismatches, {elapsed:.1?}", corpus.len(), random.len()),
    )
}

fn girth_four() -> Verdict {
    let start = Instant::now();
    let corpus = connected_graphs(8, |g| girth(g) != Some(3));
    let mismatches: usize = corpus
        .par_iter()
        .map(|g| {
            let w = decide_girth4(g).unwrap();
            let valid = w.as_ref().is_none_or(|w| verify_witness(g, w.mixed()).is_ok());
            let enumerated = enumerate_qt(g).unwrap().next().is_some();
            usize::from(!valid || w.is_some() != enumerated || w.is_some() != bipartition(g).is_some())
        })
        .sum();
    verdict(mismatches == 0, format!("{} triangle-free graphs, {mismatches} mismatches, {:.1?}", corpus.len(), start.elapsed()))
}

fn reduction_check(y: &CnfInstance) -> Result<bool, String> {
    let (g, rm) = build_reduction(y).map_err(|e| e.to_string())?;
    let nae = brute_nae(y).map_err(|e| e.to_string())?;
    let found = decide_qt(&g, &SolveOptions::default()).map_err(|e| e.to_string())?;
    if nae.is_some() != found.is_some() {
        return Err(format!("{:?}: brute force {} but search {}", y.clauses(), nae.is_some(), found.is_some()));
    }
    if let Some(f) = &nae {
        let w = assignment_to_witness(y, f, &rm).map_err(|e| e.to_string())?;
        if witness_to_assignment(&rm, &w).map_err(|e| e.to_string())? != *f {
            return Err(format!("{:?}: assignment does not round trip", y.clauses()));
        }
    }
    if let Some(w) = found {
        let f = witness_to_assignment(&rm, w.mixed()).map_err(|e| e.to_string())?;
        if !y.is_nae_satisfied_by(&f) {
            return Err(format!("{:?}: extracted assignment is not NAE", y.clauses()));
        }
    }
    Ok(nae.is_some())
}

fn reduction() -> Verdict {
    let start = Instant::now();
    let mut instances = small_instances(6, 2);
    let exhaustive = instances.len();
    let mut rng = seeded_rng(7);
    for _ in 0..100 {
        let vars = rng.gen_range(3..=8);
        let clauses = rng.gen_range(1..=4);
        instances.push(random_instance(&mut rng, vars, clauses));
    }
    let results: Vec<Result<bool, String>> = instances.par_iter().map(reduction_check).collect();
    let failures: Vec<&String> = results.iter().filter_map(|r| r.as_ref().err()).collect();
    let yes = results.iter().filter(|r| matches!(r, Ok(true))).count();
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    let fano = reduction_check(&CnfInstance::new(7, lines.to_vec()).unwrap());
    let elapsed = start.elapsed();
    let detail = format!(
        "{exhaustive} exhaustive + 100 random instances ({yes} satisfiable), Fano plane {}, {} mismatches, {elapsed:.1?}{}",
        match &fano {
            Ok(false) => "rejected by both",
            _ => "NOT rejected by both",
        },
        failures.len(),
        failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
    );
    verdict(failures.is_empty() && fano == Ok(false) && elapsed < Duration::from_secs(900), detail)
}

fn structural_properties() -> Verdict {
    let start = Instant::now();
    let corpus = connected_graphs(7, |_| true);
    let (small, dense): (Vec<&Graph>, Vec<&Graph>) =
        corpus.iter().partition(|g| g.edge_count() <= ENUMERATION_EDGE_CAP);
    let (orientations, violations): (usize, Vec<String>) = small
        .par_iter()
        .map(|g| {
            let facts = Facts::new(g);
            let mut count = 0;
            let mut bad = Vec::new();
            for o in enumerate_qt(g).unwrap() {
                count += 1;
                if let Some(v) = violations_with(&facts, &o).into_iter().next() {
                    bad.push(format!("{:?}: {v}", g.edges()));
                }
            }
            (count, bad)
        })
        .reduce(|| (0, Vec::new()), |a, b| (a.0 + b.0, [a.1, b.1].concat()));
    // graphs above the enumeration cap: one solver witness each
    let dense_bad = dense
        .iter()
        .filter(|g| {
            let w = decide_qt(g, &SolveOptions::default()).unwrap().unwrap();
            !violations_with(&Facts::new(g), &w).is_empty()
                || mixed_square(&mixed_square(w.mixed())) != mixed_square(w.mixed())
        })
        .count();
    verdict(
        violations.is_empty() && dense_bad == 0,
        format!(
            "{orientations} orientations of {} graphs, {} violations; {} graphs over {ENUMERATION_EDGE_CAP} edges checked on one witness each ({dense_bad} violations), {:.1?}{}",
            small.len(),
            violations.len(),
            dense.len(),
            start.elapsed(),
            violations.first().map(|v| format!("; first: {v}")).unwrap_or_default()
        ),
    )
}

fn embedding() -> Verdict {
    let mut rng = seeded_rng(99);
    let mut failures = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_gnp(&mut rng, n, p);
        let (big, root) = embed_universal(&g);
        let original: Vec<usize> = (0..n).collect();
        if big.induced(&original).graph != g || verify_witness(&big, &mixed_square(&root)).is_err() {
            failures += 1;
        }
    }
    verdict(failures == 0, format!("100 random graphs, {failures} failures"))
}

fn removability() -> Verdict {
    let start = Instant::now();
    let corpus: Vec<Graph> = connected_graphs(7, |g| g.max_degree() <= 3)
        .into_iter()
        .chain((0..200).map({
            let mut rng = seeded_rng(5);
            move |_| {
                let n = rng.gen_range(8..=10);
                random_connected_bounded(&mut rng, n, 3, n / 2)
            }
        }))
        .collect();
    let with_removable: Vec<&Graph> =
        corpus.iter().filter(|g| (0..g.n()).any(|u| is_removable(g, u).unwrap())).collect();
    let failures: Vec<String> = with_removable
        .par_iter()
        .flat_map_iter(|g| removability_violations(g, exact).into_iter().map(move |v| format!("{:?}: {v}", g.edges())))
        .collect();
    verdict(
        failures.is_empty() && !with_removable.is_empty(),
        format!(
            "{} graphs with a removable vertex, {} failures, {:.1?}{}",
            with_removable.len(),
            failures.len(),
            start.elapsed(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn known_instances() -> Verdict {
    let cases = [("c5", 1), ("k5", 0), ("pi", 1), ("prism", 1), ("k4", 0), ("c6", 0)];
    let mut wrong = Vec::new();
    for (name, want) in cases {
        let code = bin().args(["decide", &fixture(&format!("{name}.graph"))]).status().expect("binary runs").code();
        if code != Some(want) {
            wrong.push(format!("{name} exited {code:?}"));
        }
    }
    verdict(wrong.is_empty(), if wrong.is_empty() { "6 fixtures, exit codes as expected".into() } else { wrong.join(", ") })
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("gadget signatures", gadget_signatures),
        ("max-degree-3 decision vs exact search", degree_three),
        ("girth-4 decision vs enumeration and bipartiteness", girth_four),
        ("NAE reduction equivalence and round trip", reduction),
        ("structural properties of all small orientations", structural_properties),
        ("universal embedding", embedding),
        ("removable vertices", removability),
        ("known instances via the CLI", known_instances),
    ];
    let mut stdout = std::io::stdout().lock();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        failed += usize::from(!v.pass);
        let status = if v.pass { "PASS" } else { "FAIL" };
        writeln!(stdout, "criterion {} {name}: {status} ({})", i + 1, v.detail).unwrap();
        stdout.flush().unwrap();
    }
    writeln!(stdout, "acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len()).unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
