//! Text formats for groups.
//!
//! Table format:
//!
//! ```text
//! order 3
//! label Z3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Generator-list format (one permutation per line in cycle notation):
//!
//! ```text
//! degree 3
//! (0 1 2)
//! (0 1)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored in both.

use std::fmt::Write as _;

use super::{FiniteGroup, Perm};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn write_table(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = format!("order {n}\n");
    if let Some(label) = group.label() {
        let _ = writeln!(out, "label {label}");
    }
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| group.mul(i, j).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn read_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let order: usize = header
        .strip_prefix("order")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::parse(line, "expected `order N`"))?;
    let mut label = None;
    let mut table = Vec::with_capacity(order * order);
    let mut rows = 0;
    for (line, text) in lines {
        if let Some(l) = text.strip_prefix("label") {
            label = Some(l.trim().to_string());
            continue;
        }
        let row = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != order {
            return Err(Error::parse(
                line,
                format!("expected {order} entries, found {}", row.len()),
            ));
        }
        table.extend(row);
        rows += 1;
    }
    if rows != order {
        return Err(Error::parse(0, format!("expected {order} rows, found {rows}")));
    }
    let group = FiniteGroup::from_table(order, table)?;
    Ok(match label {
        Some(l) => group.with_label(l),
        None => group,
    })
}

pub fn write_generators(degree: usize, generators: &[Perm]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in generators {
        let _ = writeln!(out, "{g}");
    }
    out
}

pub fn read_generators(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let degree: usize = header
        .strip_prefix("degree")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::parse(line, "expected `degree N`"))?;
    let generators = lines
        .map(|(line, text)| Perm::parse_cycles(degree, text).map_err(|e| Error::parse(line, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok((degree, generators))
}

/// Reads a generator list and closes it into a group.
pub fn group_from_generator_file(text: &str) -> Result<FiniteGroup> {
    let (degree, generators) = read_generators(text)?;
    FiniteGroup::from_generators(degree, &generators)
}
