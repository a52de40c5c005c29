//! DIMACS CNF input restricted to 3-literal clauses.

use std::fmt::Write as _;

use mutvis_core::reduction::{CnfFormula, Literal};

use crate::ParseError;

/// Parses `p cnf <vars> <clauses>` followed by zero-terminated clauses.
/// `c` lines are comments and a `%` line ends the input. A clause may span
/// lines; errors point at the line where it ends.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            continue;
        }
        if s.starts_with('%') {
            break;
        }
        last = line;
        if s.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::new(line, "second `p` line"));
            }
            let parts: Vec<&str> = s.split_whitespace().collect();
            let bad = || ParseError::new(line, "header must be `p cnf <vars> <clauses>`");
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(bad());
            }
            let vars = parts[2].parse().map_err(|_| bad())?;
            let count = parts[3].parse().map_err(|_| bad())?;
            header = Some((vars, count, line));
            continue;
        }
        let Some((vars, _, _)) = header else {
            return Err(ParseError::new(line, "clause before the `p cnf` header"));
        };
        for tok in s.split_whitespace() {
            let x: i32 = tok
                .parse()
                .map_err(|_| ParseError::new(line, format!("`{tok}` is not a literal")))?;
            if x == 0 {
                clauses.push(finish_clause(&mut current, line)?);
                continue;
            }
            if x.unsigned_abs() as usize > vars {
                return Err(ParseError::new(
                    line,
                    format!("literal {x} uses a variable above {vars}"),
                ));
            }
            current.push(Literal::from_signed(x).expect("nonzero"));
        }
    }
    let Some((vars, count, hline)) = header else {
        return Err(ParseError::new(last.max(1), "missing `p cnf` header"));
    };
    if !current.is_empty() {
        clauses.push(finish_clause(&mut current, last)?);
    }
    if clauses.len() != count {
        return Err(ParseError::new(
            hline,
            format!(
                "header declares {count} clauses but {} were given",
                clauses.len()
            ),
        ));
    }
    CnfFormula::new(vars, clauses).map_err(|e| ParseError::new(hline, e.to_string()))
}

fn finish_clause(current: &mut Vec<Literal>, line: usize) -> Result<[Literal; 3], ParseError> {
    let lits = std::mem::take(current);
    let arr: [Literal; 3] = lits.as_slice().try_into().map_err(|_| {
        ParseError::new(
            line,
            format!("clause has {} literals, expected 3", lits.len()),
        )
    })?;
    if arr[0] == arr[1] || arr[0] == arr[2] || arr[1] == arr[2] {
        return Err(ParseError::new(line, "clause repeats a literal"));
    }
    Ok(arr)
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        let _ = writeln!(out, "{} {} {} 0", c[0], c[1], c[2]);
    }
    out
}
