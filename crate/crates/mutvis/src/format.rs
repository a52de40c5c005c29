//! Plain-text graph and point-set files.
//!
//! Graph file: after optional `#` comment lines, a header `n m`, then `m`
//! lines `u v` with `0 <= u < v < n`. Blank lines and `#` lines may appear
//! anywhere. Writers emit edges sorted, so output is byte-stable.
//!
//! Point file: whitespace-separated vertex ids on any number of lines;
//! everything after a `#` on a line is a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use mutvis_core::{Graph, PointSet, Vertex};

use crate::ParseError;

/// Non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize), ParseError> {
    let mut it = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = it
            .next()
            .ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
        tok.parse().map_err(|_| {
            ParseError::new(
                line,
                format!("{what} `{tok}` is not a non-negative integer"),
            )
        })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(ParseError::new(line, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(text.lines().count().max(1), "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut last_line = hline;
    for (line, s) in lines {
        last_line = line;
        let (u, v) = parse_pair(line, s)?;
        if u >= v {
            return Err(ParseError::new(
                line,
                format!("edge `{u} {v}` must have u < v"),
            ));
        }
        if v >= n {
            return Err(ParseError::new(
                line,
                format!("vertex {v} is not below n = {n}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::new(line, format!("duplicate edge `{u} {v}`")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::new(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges).map_err(|e| ParseError::new(hline, e.to_string()))
}

/// Graph file text; each `comments` entry becomes a leading `# ` line.
pub fn write_graph(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a point file for a graph with `n` vertices. Duplicates and ids
/// out of range are errors.
pub fn parse_points(text: &str, n: usize) -> Result<PointSet, ParseError> {
    let mut set = PointSet::new(n);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let v: Vertex = tok
                .parse()
                .map_err(|_| ParseError::new(line, format!("`{tok}` is not a vertex id")))?;
            if v >= n {
                return Err(ParseError::new(
                    line,
                    format!("vertex {v} is not below n = {n}"),
                ));
            }
            if !set.insert(v) {
                return Err(ParseError::new(line, format!("duplicate point {v}")));
            }
        }
    }
    Ok(set)
}

/// One line of ascending ids.
pub fn write_points(p: &PointSet) -> String {
    let ids: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    format!("{}\n", ids.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mutvis_core::generators;

    #[test]
    fn round_trip() {
        let g = generators::grid(3, 4);
        let text = write_graph(&g, &["grid".to_string()]);
        assert!(text.starts_with("# grid\n12 17\n0 1\n0 4\n"));
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph(&back, &["grid".to_string()]), text);
    }

    #[test]
    fn graph_errors_carry_lines() {
        let err = parse_graph("# c\n3 2\n0 1\n2 1\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert_eq!(parse_graph("3 2\n0 1\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("3 1\n0 x\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("3 2\n0 1\n0 1\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("2 1\n0 5\n").unwrap_err().line, 2);
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn points() {
        let p = parse_points("0 2 # first\n\n3\n", 4).unwrap();
        assert_eq!(p.to_vec(), vec![0, 2, 3]);
        assert_eq!(write_points(&p), "0 2 3\n");
        assert_eq!(parse_points("1 1", 4).unwrap_err().line, 1);
        assert_eq!(parse_points("1\n9", 4).unwrap_err().line, 2);
    }
}
