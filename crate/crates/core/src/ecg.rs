//! The ECG text format for instances.
//!
//! ```text
//! # v and u between s and t
//! n 4
//! colors red green
//! s 0
//! t 3
//! e 0 1 red,green
//! e 0 2 red
//! e 1 3 red,green
//! e 2 3 red
//! ```
//!
//! One record per line, `#` starts a comment, vertices are 0-based. An
//! optional `l <bound>` record sets the path length bound. The canonical
//! form written by [`serialize_instance`] lists `n`, `colors`, `s`, `t`,
//! `l`, then edges sorted lexicographically with colors in declaration
//! order.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::EdgeColoredGraph;
use crate::instance::{Mode, ProblemInstance};

fn parse_usize(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("malformed {what} {token:?}")))
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, record: &str) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(ParseError::new(line, format!("duplicate `{record}` record")));
    }
    *slot = Some(value);
    Ok(())
}

/// Parses an instance in ECG format. The returned instance is in CDP mode;
/// the mode is a property of the query, not of the file.
pub fn parse_instance(text: &str) -> Result<ProblemInstance, ParseError> {
    let mut vertex_count = None;
    let mut colors: Option<Vec<String>> = None;
    let mut source = None;
    let mut target = None;
    let mut bound = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let record = tokens.next().unwrap_or_default();
        match record {
            "n" => set_once(&mut vertex_count, parse_usize(tokens.next(), line, "vertex count")?, line, "n")?,
            "colors" => set_once(&mut colors, tokens.by_ref().map(str::to_string).collect(), line, "colors")?,
            "s" => set_once(&mut source, parse_usize(tokens.next(), line, "source")?, line, "s")?,
            "t" => set_once(&mut target, parse_usize(tokens.next(), line, "target")?, line, "t")?,
            "l" => {
                let l = parse_usize(tokens.next(), line, "length bound")?;
                if l == 0 {
                    return Err(ParseError::new(line, "length bound must be at least 1"));
                }
                set_once(&mut bound, l, line, "l")?
            }
            "e" => {
                let u = parse_usize(tokens.next(), line, "edge endpoint")?;
                let v = parse_usize(tokens.next(), line, "edge endpoint")?;
                let list = tokens
                    .next()
                    .ok_or_else(|| ParseError::new(line, "missing edge colors"))?;
                let names: Vec<String> = list.split(',').map(str::to_string).collect();
                if names.iter().any(String::is_empty) {
                    return Err(ParseError::new(line, format!("malformed color list {list:?}")));
                }
                edges.push((line, u, v, names));
            }
            other => return Err(ParseError::new(line, format!("unknown record `{other}`"))),
        }
        if let Some(extra) = tokens.next() {
            return Err(ParseError::new(line, format!("unexpected token {extra:?}")));
        }
    }

    let last = text.lines().count().max(1);
    let vertex_count = vertex_count.ok_or_else(|| ParseError::new(last, "missing `n` record"))?;
    let colors = colors.ok_or_else(|| ParseError::new(last, "missing `colors` record"))?;
    let source = source.ok_or_else(|| ParseError::new(last, "missing `s` record"))?;
    let target = target.ok_or_else(|| ParseError::new(last, "missing `t` record"))?;

    let mut graph = EdgeColoredGraph::new(vertex_count, colors).map_err(|e| ParseError::new(1, e.to_string()))?;
    for (line, u, v, names) in edges {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        graph.add_edge_named(u, v, &refs).map_err(|e| {
            let message = match e {
                GraphError::SelfLoop(_) => format!("self-loop {{{u},{v}}}"),
                other => other.to_string(),
            };
            ParseError::new(line, message)
        })?;
    }
    for (what, vertex) in [("source", source), ("target", target)] {
        if vertex >= vertex_count {
            return Err(ParseError::new(last, format!("{what} {vertex} out of range")));
        }
    }
    if source == target {
        return Err(ParseError::new(last, "source equals target"));
    }
    Ok(ProblemInstance::new(graph, source, target, Mode::Cdp).with_length_bound(bound))
}

/// Canonical ECG text of `inst`.
pub fn serialize_instance(inst: &ProblemInstance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.vertex_count());
    let mut colors_line = String::from("colors");
    for name in g.color_names() {
        colors_line.push(' ');
        colors_line.push_str(name);
    }
    let _ = writeln!(out, "{colors_line}");
    let _ = writeln!(out, "s {}", inst.source);
    let _ = writeln!(out, "t {}", inst.target);
    if let Some(l) = inst.length_bound {
        let _ = writeln!(out, "l {l}");
    }
    for (u, v, set) in g.edges() {
        let names: Vec<&str> = set.iter().map(|c| g.color_name(c)).collect();
        let _ = writeln!(out, "e {u} {v} {}", names.join(","));
    }
    out
}
