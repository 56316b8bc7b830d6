//! The `.hg` text format.
//!
//! ```text
//! # comment
//! n m
//! v v v      <- m edge lines, 0-based ids
//! ```
//!
//! Comment lines start with `#`; blank lines and trailing whitespace are
//! ignored. The writer emits edges in the canonical order kept by
//! [`Hypergraph`], so `write(parse(s))` is stable.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_error(hline, "header must be `n m`"));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| parse_error(hline, format!("bad vertex count {:?}", fields[0])))?;
    let m: usize = fields[1]
        .parse()
        .map_err(|_| parse_error(hline, format!("bad edge count {:?}", fields[1])))?;

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(parse_error(lineno, format!("more than the declared {m} edges")));
        }
        let edge = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Vertex>()
                    .map_err(|_| parse_error(lineno, format!("bad vertex id {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(&v) = edge.iter().find(|&&v| v >= n) {
            return Err(parse_error(lineno, format!("vertex {v} out of range 0..{n}")));
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(parse_error(
            text.lines().count().max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

pub fn write(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", h.order(), h.size()).unwrap();
    for e in h.edges() {
        let mut first = true;
        for v in e {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn read_file(path: &std::path::Path) -> Result<Hypergraph> {
    parse(&std::fs::read_to_string(path)?)
}
