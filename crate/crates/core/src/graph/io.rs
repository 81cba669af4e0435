//! Line-oriented text format.
//!
//! ```text
//! c optional comments
//! p graph <n> <m>            p mixed <n> <m_edges> <m_arcs>
//! e <u> <v>                  e <u> <v>
//!                            a <tail> <head>
//! ```
//!
//! Vertices are 0-indexed. Blank lines and `c` lines are ignored anywhere.

use super::{Graph, GraphError, MixedGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p {0}` header")]
    MissingHeader(&'static str),
    #[error("header declares {declared} {what} but {found} were listed")]
    CountMismatch { what: &'static str, declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn numbers<'a>(line: usize, fields: impl Iterator<Item = &'a str>, want: usize) -> Result<Vec<usize>, ParseError> {
    let vals: Vec<usize> = fields
        .map(|f| f.parse::<usize>().map_err(|_| syntax(line, format!("`{f}` is not a vertex id or count"))))
        .collect::<Result<_, _>>()?;
    if vals.len() != want {
        return Err(syntax(line, format!("expected {want} numbers, found {}", vals.len())));
    }
    Ok(vals)
}

struct Parsed {
    header: Vec<usize>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

fn parse(text: &str, kind: &'static str, header_len: usize, allow_arcs: bool) -> Result<Parsed, ParseError> {
    let mut header: Option<Vec<usize>> = None;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate header"));
                }
                match fields.next() {
                    Some(k) if k == kind => {}
                    Some(k) => return Err(syntax(line, format!("expected `p {kind}`, found `p {k}`"))),
                    None => return Err(syntax(line, "incomplete header")),
                }
                header = Some(numbers(line, fields, header_len)?);
            }
            "e" | "a" => {
                if header.is_none() {
                    return Err(syntax(line, "record before header"));
                }
                if tag == "a" && !allow_arcs {
                    return Err(syntax(line, "arcs are not allowed in a `p graph` file"));
                }
                let v = numbers(line, fields, 2)?;
                if tag == "e" {
                    edges.push((v[0], v[1]));
                } else {
                    arcs.push((v[0], v[1]));
                }
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let header = header.ok_or(ParseError::MissingHeader(kind))?;
    Ok(Parsed { header, edges, arcs })
}

fn check_count(what: &'static str, declared: usize, found: usize) -> Result<(), ParseError> {
    if declared != found {
        return Err(ParseError::CountMismatch { what, declared, found });
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let p = parse(text, "graph", 2, false)?;
    check_count("edges", p.header[1], p.edges.len())?;
    Ok(Graph::new(p.header[0], p.edges)?)
}

pub fn parse_mixed(text: &str) -> Result<MixedGraph, ParseError> {
    let p = parse(text, "mixed", 3, true)?;
    check_count("edges", p.header[1], p.edges.len())?;
    check_count("arcs", p.header[2], p.arcs.len())?;
    Ok(MixedGraph::new(p.header[0], p.edges, p.arcs)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p graph {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!("e {u} {v}\n"));
    }
    s
}

pub fn write_mixed(m: &MixedGraph) -> String {
    let mut s = format!("p mixed {} {} {}\n", m.n(), m.edges().len(), m.arcs().len());
    for &(u, v) in m.edges() {
        s.push_str(&format!("e {u} {v}\n"));
    }
    for &(u, v) in m.arcs() {
        s.push_str(&format!("a {u} {v}\n"));
    }
    s
}
