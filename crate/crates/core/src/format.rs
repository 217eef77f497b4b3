//! The line-oriented `.dhg` text format.
//!
//! ```text
//! # comment
//! v lonely          # declares a vertex
//! e a b > c         # tails a b, head c
//! ```
//!
//! Declared vertices come first in the vertex sequence, in declaration order;
//! the remaining vertices follow in order of first appearance on `e` lines
//! (tails before heads within a line).

use crate::error::{Error, Result};
use crate::hypergraph::DirectedHypergraph;

enum Line<'a> {
    Vertex(&'a str),
    Edge(Vec<&'a str>, Vec<&'a str>),
}

fn parse_line(line: &str) -> std::result::Result<Option<Line<'_>>, String> {
    let content = line.split('#').next().unwrap_or("");
    let mut tokens = content.split_whitespace();
    let Some(keyword) = tokens.next() else {
        return Ok(None);
    };
    match keyword {
        "v" => match (tokens.next(), tokens.next()) {
            (Some(name), None) => Ok(Some(Line::Vertex(name))),
            _ => Err("`v` takes exactly one vertex name".into()),
        },
        "e" => {
            let rest: Vec<&str> = tokens.collect();
            let mut parts = rest.split(|t| *t == ">");
            let tail = parts.next().unwrap_or(&[]);
            let Some(head) = parts.next() else {
                return Err("edge line is missing `>`".into());
            };
            if parts.next().is_some() {
                return Err("edge line has more than one `>`".into());
            }
            Ok(Some(Line::Edge(tail.to_vec(), head.to_vec())))
        }
        other => Err(format!("unknown line kind {other:?}")),
    }
}

pub fn parse(text: &str) -> Result<DirectedHypergraph> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        match parse_line(raw) {
            Ok(Some(line)) => lines.push((lineno, line)),
            Ok(None) => {}
            Err(message) => return Err(Error::Parse { line: lineno, message }),
        }
    }

    let at = |line: usize| {
        move |e: Error| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line,
                message: other.to_string(),
            },
        }
    };

    let mut h = DirectedHypergraph::new();
    for (lineno, line) in &lines {
        if let Line::Vertex(name) = line {
            h.add_vertex(*name).map_err(at(*lineno))?;
        }
    }
    for (lineno, line) in &lines {
        if let Line::Edge(tail, head) = line {
            h.add_edge_named(tail, head).map_err(at(*lineno))?;
        }
    }
    Ok(h)
}

/// Canonical form: every vertex as a `v` line, then every edge with tails and
/// heads in vertex order.
pub fn serialize(h: &DirectedHypergraph) -> String {
    let mut out = String::new();
    for name in h.names() {
        out.push_str("v ");
        out.push_str(name);
        out.push('\n');
    }
    for e in h.edges() {
        out.push('e');
        for &v in e.tail() {
            out.push(' ');
            out.push_str(h.name(v));
        }
        out.push_str(" >");
        for &v in e.head() {
            out.push(' ');
            out.push_str(h.name(v));
        }
        out.push('\n');
    }
    out
}
