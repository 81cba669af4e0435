use super::NaeError;
use std::fmt;

/// Largest variable count [`brute_nae`] will scan.
pub const BRUTE_FORCE_VARIABLE_CAP: usize = 24;

/// Monotone 3-CNF: every clause names three distinct variables, all positive.
/// Variables are `0..num_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl CnfInstance {
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self, NaeError> {
        for (k, c) in clauses.iter().enumerate() {
            if let Some(&var) = c.iter().find(|&&x| x >= num_vars) {
                return Err(NaeError::VariableOutOfRange { var, num_vars });
            }
            if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
                return Err(NaeError::RepeatedVariable { clause: k });
            }
        }
        Ok(CnfInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Every clause has a true and a false literal under `f`.
    pub fn is_nae_satisfied_by(&self, f: &Assignment) -> bool {
        f.len() == self.num_vars && self.first_constant_clause(f).is_none()
    }

    pub(crate) fn first_constant_clause(&self, f: &Assignment) -> Option<usize> {
        self.clauses.iter().position(|c| {
            let t = c.map(|x| f.get(x));
            t[0] == t[1] && t[1] == t[2]
        })
    }
}

/// Truth value per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: usize) -> bool {
        self.0[var]
    }

    /// Parses `v <x> <0|1>` lines with 1-based variables; every variable in
    /// `1..=n` must appear exactly once.
    pub fn parse(text: &str) -> Result<Self, NaeError> {
        let mut seen: Vec<(usize, bool)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let f: Vec<&str> = line.split_whitespace().collect();
            match f.as_slice() {
                [] | ["c", ..] => {}
                ["v", x, b] => {
                    let x: usize = x
                        .parse()
                        .ok()
                        .filter(|&x| x > 0)
                        .ok_or_else(|| NaeError::Syntax { line: line_no, msg: format!("bad variable `{x}`") })?;
                    let b = match *b {
                        "0" => false,
                        "1" => true,
                        other => return Err(NaeError::Syntax { line: line_no, msg: format!("bad value `{other}`") }),
                    };
                    seen.push((x - 1, b));
                }
                _ => return Err(NaeError::Syntax { line: line_no, msg: "expected `v <x> <0|1>`".into() }),
            }
        }
        let n = seen.len();
        let mut out = vec![None; n];
        for (x, b) in seen {
            match out.get_mut(x) {
                Some(slot @ None) => *slot = Some(b),
                _ => return Err(NaeError::Syntax { line: 0, msg: format!("variable {} missing or repeated", x + 1) }),
            }
        }
        Ok(Assignment(out.into_iter().map(Option::unwrap).collect()))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, &b) in self.0.iter().enumerate() {
            writeln!(f, "v {} {}", x + 1, u8::from(b))?;
        }
        Ok(())
    }
}

/// Parses DIMACS CNF restricted to monotone clauses of exactly three literals.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance, NaeError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let t = line.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if t.starts_with('p') {
            let f: Vec<&str> = t.split_whitespace().collect();
            let parsed = match f.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            if header.is_some() || parsed.is_none() {
                return Err(NaeError::Syntax { line: line_no, msg: "expected a single `p cnf <vars> <clauses>`".into() });
            }
            header = parsed;
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(NaeError::Syntax { line: line_no, msg: "clause before `p cnf` header".into() });
        };
        for tok in t.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| NaeError::Syntax { line: line_no, msg: format!("bad literal `{tok}`") })?;
            if lit < 0 {
                return Err(NaeError::NegativeLiteral { line: line_no, literal: lit });
            }
            if lit == 0 {
                let c: [usize; 3] = current
                    .as_slice()
                    .try_into()
                    .map_err(|_| NaeError::Syntax { line: line_no, msg: format!("clause has {} literals, expected 3", current.len()) })?;
                clauses.push(c);
                current.clear();
                continue;
            }
            let var = lit as usize;
            if var > num_vars {
                return Err(NaeError::VariableOutOfRange { var, num_vars });
            }
            current.push(var - 1);
        }
    }
    let Some((num_vars, num_clauses)) = header else {
        return Err(NaeError::Syntax { line: last_line, msg: "missing `p cnf` header".into() });
    };
    if !current.is_empty() {
        return Err(NaeError::Syntax { line: last_line, msg: "last clause is not terminated by 0".into() });
    }
    if clauses.len() != num_clauses {
        return Err(NaeError::Syntax {
            line: last_line,
            msg: format!("header declares {num_clauses} clauses, found {}", clauses.len()),
        });
    }
    CnfInstance::new(num_vars, clauses)
}

pub fn write_dimacs(y: &CnfInstance) -> String {
    let mut out = format!("p cnf {} {}\n", y.num_vars(), y.clauses().len());
    for c in y.clauses() {
        out.push_str(&format!("{} {} {} 0\n", c[0] + 1, c[1] + 1, c[2] + 1));
    }
    out
}

/// First not-all-equal assignment in counting order, variable 0 the least
/// significant bit.
pub fn brute_nae(y: &CnfInstance) -> Result<Option<Assignment>, NaeError> {
    let n = y.num_vars();
    if n > BRUTE_FORCE_VARIABLE_CAP {
        return Err(NaeError::TooManyVariables { vars: n, cap: BRUTE_FORCE_VARIABLE_CAP });
    }
    let masks: Vec<u32> = y.clauses().iter().map(|c| c.iter().map(|&x| 1u32 << x).sum()).collect();
    let hit = (0u32..1 << n).find(|&bits| masks.iter().all(|&m| bits & m != 0 && bits & m != m));
    Ok(hit.map(|bits| Assignment((0..n).map(|x| bits >> x & 1 == 1).collect())))
}
