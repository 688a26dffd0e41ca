use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line: lineno,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(Error::Parse {
            line: lineno,
            message: format!("unexpected trailing field {extra:?}"),
        });
    }
    Ok((a, b))
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with 1-based labels. `#` starts a comment; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let pair = parse_pair(line, lineno)?;
        if header.is_none() {
            header = Some(pair);
        } else {
            edges.push(pair);
            edge_lines.push(lineno);
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing header line \"n m\"".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: edge_lines.last().copied().unwrap_or(0),
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let mut g = Graph::empty(n);
    for (&(u, v), &lineno) in edges.iter().zip(&edge_lines) {
        // surface bad edges with their line number
        Graph::from_edge_list(n, &[(u, v)]).map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        if !g.insert_edge(u - 1, v - 1) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("duplicate edge ({u}, {v})"),
            });
        }
    }
    Ok(g)
}

/// Writes `g` in the edge-list format, edges sorted, 1-based.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}
