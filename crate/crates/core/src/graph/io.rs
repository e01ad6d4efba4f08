//! Edge-list and DOT text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertex
//! indices. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let nums: Vec<usize> = l
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad integer {t:?}"))))
            .collect::<Result<_>>()?;
        match nums[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Error::parse(line, "expected two integers")),
        }
    };
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            0,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        return Err(Error::parse(0, "repeated edges"));
    }
    Ok(g)
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", escape(name));
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(g.label(v)));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
