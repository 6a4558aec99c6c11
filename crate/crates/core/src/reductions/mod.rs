//! Constructive hardness reductions into MaxCDP/MaxCDDP, their solution
//! mappers, and seeded instance generators.

mod generators;
mod isc;
mod threshold;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{ParseError, ReductionError};
use crate::graph::{SimpleGraph, Vertex};

pub use generators::{
    gen_disjoint_paths_instance, gen_near_disjoint_paths_instance, gen_random_cubic, gen_random_instance,
    gen_random_ts, gen_tree_instance, RandomInstanceParams,
};
pub use isc::{lift_is_to_paths, project_paths_to_is, reduce_isc_to_cddp, IscLayout};
pub use threshold::{lift_ts_solution, project_paths_to_ts, reduce_ts_to_cdp, ThresholdLayout, ThresholdSetInstance};

/// Hex SHA-256 of `text`.
pub fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Maps the vertices and colors of a reduced instance back to the objects
/// of the source instance they were built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionCertificate {
    pub source_digest: String,
    /// Name of every constructed vertex, by index.
    pub vertices: Vec<String>,
    /// Source object behind every color, by color index.
    pub colors: Vec<String>,
}

impl ReductionCertificate {
    /// Names are pairwise distinct, so the tables are bijections onto the
    /// constructed vertices and colors.
    pub fn is_bijective(&self) -> bool {
        let distinct = |names: &[String]| {
            let set: std::collections::HashSet<&String> = names.iter().collect();
            set.len() == names.len()
        };
        distinct(&self.vertices) && distinct(&self.colors)
    }
}

/// 3-regular simple graph. Neighbors of every vertex are ordered by
/// ascending index; that order fixes which gadget vertex each edge uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicGraph {
    graph: SimpleGraph,
}

impl CubicGraph {
    pub fn new(graph: SimpleGraph) -> Result<Self, ReductionError> {
        for v in 0..graph.vertex_count() {
            if graph.degree(v) != 3 {
                return Err(ReductionError::NotCubic { vertex: v, degree: graph.degree(v) });
            }
        }
        Ok(CubicGraph { graph })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// 1-based position of `j` in the ordered neighborhood of `i`.
    pub fn neighbor_position(&self, i: Vertex, j: Vertex) -> Option<usize> {
        self.graph.neighbors(i).iter().position(|&w| w == j).map(|p| p + 1)
    }
}

/// Parses a simple graph: `n <count>` followed by `e <u> <v>` records.
pub fn parse_simple_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let num = |i: usize| -> Result<usize, ParseError> {
            tokens
                .get(i)
                .ok_or_else(|| ParseError::new(line, "missing field"))?
                .parse()
                .map_err(|_| ParseError::new(line, format!("malformed number {:?}", tokens[i])))
        };
        match (tokens[0], tokens.len()) {
            ("n", 2) if n.is_none() => n = Some(num(1)?),
            ("n", 2) => return Err(ParseError::new(line, "duplicate `n` record")),
            ("e", 3) => {
                let count = n.ok_or_else(|| ParseError::new(line, "`e` before `n`"))?;
                let (u, v) = (num(1)?, num(2)?);
                if u >= count || v >= count {
                    return Err(ParseError::new(line, "vertex out of range"));
                }
                if u == v {
                    return Err(ParseError::new(line, format!("self-loop {{{u},{v}}}")));
                }
                edges.push((line, u, v));
            }
            _ => return Err(ParseError::new(line, format!("malformed record {content:?}"))),
        }
    }
    let n = n.ok_or_else(|| ParseError::new(text.lines().count().max(1), "missing `n` record"))?;
    let mut g = SimpleGraph::new(n);
    for (line, u, v) in edges {
        if !g.add_edge(u, v) {
            return Err(ParseError::new(line, format!("duplicate edge {{{u},{v}}}")));
        }
    }
    Ok(g)
}

pub fn serialize_simple_graph(g: &SimpleGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
