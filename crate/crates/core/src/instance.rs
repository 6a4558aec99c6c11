//! Problem instances, solutions, and their validation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::SolveError;
use crate::graph::{Color, EdgeColoredGraph, Vertex};

/// Which disjointness the paths of a solution must satisfy.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Internally vertex-disjoint paths, colors may repeat.
    #[default]
    Cdp,
    /// Internally vertex-disjoint paths with pairwise distinct colors.
    Cddp,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cdp => "cdp",
            Mode::Cddp => "cddp",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cdp" => Ok(Mode::Cdp),
            "cddp" => Ok(Mode::Cddp),
            other => Err(format!("unknown mode {other:?} (expected cdp or cddp)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub graph: EdgeColoredGraph,
    pub source: Vertex,
    pub target: Vertex,
    /// Maximum number of edges per path.
    pub length_bound: Option<usize>,
    pub mode: Mode,
}

impl ProblemInstance {
    pub fn new(graph: EdgeColoredGraph, source: Vertex, target: Vertex, mode: Mode) -> Self {
        ProblemInstance { graph, source, target, length_bound: None, mode }
    }

    pub fn with_length_bound(mut self, bound: Option<usize>) -> Self {
        self.length_bound = bound;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_graph(&self, graph: EdgeColoredGraph) -> Self {
        ProblemInstance { graph, ..self.clone() }
    }

    pub fn is_terminal(&self, v: Vertex) -> bool {
        v == self.source || v == self.target
    }

    /// Vertices other than the two terminals, ascending.
    pub fn interior(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.graph.vertex_count()).filter(move |&v| !self.is_terminal(v))
    }

    pub fn has_direct_edge(&self) -> bool {
        self.graph.has_edge(self.source, self.target)
    }

    /// `Ok` when [`validate_instance`] reports nothing.
    pub fn check(&self) -> Result<(), SolveError> {
        let report = validate_instance(self);
        if report.is_valid() {
            Ok(())
        } else {
            Err(SolveError::Precondition(format!("invalid instance: {report}")))
        }
    }

    pub(crate) fn reject_length_bound(&self, algorithm: &str) -> Result<(), SolveError> {
        match self.length_bound {
            Some(l) => Err(SolveError::Precondition(format!(
                "{algorithm} solves the unbounded problem; instance has length bound {l}"
            ))),
            None => Ok(()),
        }
    }
}

/// Simple st-path all of whose edges carry `color`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniColorPath {
    pub vertices: Vec<Vertex>,
    pub color: Color,
}

impl UniColorPath {
    pub fn new(vertices: Vec<Vertex>, color: Color) -> Self {
        UniColorPath { vertices, color }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices strictly between the endpoints.
    pub fn internal(&self) -> &[Vertex] {
        if self.vertices.len() < 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSolution {
    pub paths: Vec<UniColorPath>,
    pub mode: Mode,
}

impl PathSolution {
    pub fn new(mode: Mode) -> Self {
        PathSolution { paths: Vec::new(), mode }
    }

    pub fn from_paths(paths: Vec<UniColorPath>, mode: Mode) -> Self {
        PathSolution { paths, mode }
    }

    pub fn value(&self) -> usize {
        self.paths.len()
    }

    pub fn extend(&mut self, other: PathSolution) {
        self.paths.extend(other.paths);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SourceEqualsTarget,
    TerminalOutOfRange { terminal: &'static str, vertex: Vertex },
    ZeroLengthBound,
    EdgeOutOfRange(Vertex, Vertex),
    SelfLoop(Vertex),
    EmptyColorSet(Vertex, Vertex),
    UnknownColor { edge: (Vertex, Vertex), color: usize },
    DuplicateColorName(String),
    PathUnknownColor { path: usize },
    PathTooShort { path: usize },
    WrongEndpoints { path: usize },
    RepeatedVertex { path: usize, vertex: Vertex },
    MissingEdge { path: usize, edge: (Vertex, Vertex) },
    EdgeLacksColor { path: usize, edge: (Vertex, Vertex), color: String },
    TooLong { path: usize, length: usize, bound: usize },
    SharedInternalVertex { paths: (usize, usize), vertex: Vertex },
    DuplicatePath { paths: (usize, usize) },
    DuplicateColor { paths: (usize, usize), color: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            SourceEqualsTarget => write!(f, "source equals target"),
            TerminalOutOfRange { terminal, vertex } => write!(f, "{terminal} vertex {vertex} out of range"),
            ZeroLengthBound => write!(f, "length bound must be at least 1"),
            EdgeOutOfRange(u, v) => write!(f, "edge {{{u},{v}}} has an endpoint out of range"),
            SelfLoop(u) => write!(f, "self-loop on vertex {u}"),
            EmptyColorSet(u, v) => write!(f, "edge {{{u},{v}}} has no colors"),
            UnknownColor { edge: (u, v), color } => write!(f, "unknown color #{color} on edge {{{u},{v}}}"),
            DuplicateColorName(name) => write!(f, "color {name} declared twice"),
            PathUnknownColor { path } => write!(f, "path {path}: unknown color"),
            PathTooShort { path } => write!(f, "path {path}: fewer than two vertices"),
            WrongEndpoints { path } => write!(f, "path {path}: does not run from source to target"),
            RepeatedVertex { path, vertex } => write!(f, "path {path}: vertex {vertex} repeated"),
            MissingEdge { path, edge: (u, v) } => write!(f, "path {path}: {{{u},{v}}} is not an edge"),
            EdgeLacksColor { path, edge: (u, v), color } => {
                write!(f, "path {path}: edge {{{u},{v}}} lacks color {color}")
            }
            TooLong { path, length, bound } => write!(f, "path {path}: length {length} exceeds bound {bound}"),
            SharedInternalVertex { paths: (a, b), vertex } => {
                write!(f, "paths {a} and {b} share internal vertex {vertex}")
            }
            DuplicatePath { paths: (a, b) } => write!(f, "paths {a} and {b} use the same vertex sequence"),
            DuplicateColor { paths: (a, b), color } => write!(f, "duplicate color {color} (paths {a} and {b})"),
        }
    }
}

/// List of violated invariants; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn mentions(&self, needle: &str) -> bool {
        self.violations.iter().any(|v| v.to_string().contains(needle))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        let lines: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("; "))
    }
}

pub fn validate_instance(inst: &ProblemInstance) -> ValidationReport {
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut violations = Vec::new();
    if inst.source == inst.target {
        violations.push(Violation::SourceEqualsTarget);
    }
    for (terminal, vertex) in [("source", inst.source), ("target", inst.target)] {
        if vertex >= n {
            violations.push(Violation::TerminalOutOfRange { terminal, vertex });
        }
    }
    if inst.length_bound == Some(0) {
        violations.push(Violation::ZeroLengthBound);
    }
    let mut names = HashMap::new();
    for name in g.color_names() {
        if names.insert(name.as_str(), ()).is_some() {
            violations.push(Violation::DuplicateColorName(name.clone()));
        }
    }
    for (u, v, colors) in g.edges() {
        if u >= n || v >= n {
            violations.push(Violation::EdgeOutOfRange(u, v));
        }
        if u == v {
            violations.push(Violation::SelfLoop(u));
        }
        if colors.is_empty() {
            violations.push(Violation::EmptyColorSet(u, v));
        }
        for c in colors.iter() {
            if c.0 >= g.color_count() {
                violations.push(Violation::UnknownColor { edge: (u, v), color: c.0 });
            }
        }
    }
    ValidationReport { violations }
}

/// Checks every solution invariant against `inst`: endpoints, simplicity,
/// uni-color edges, length bound, internal disjointness, and color
/// distinctness when the solution is in CDDP mode.
pub fn validate_solution(inst: &ProblemInstance, sol: &PathSolution) -> ValidationReport {
    let g = &inst.graph;
    let mut violations = Vec::new();
    for (i, path) in sol.paths.iter().enumerate() {
        let vs = &path.vertices;
        if path.color.0 >= g.color_count() {
            violations.push(Violation::PathUnknownColor { path: i });
            continue;
        }
        if vs.len() < 2 {
            violations.push(Violation::PathTooShort { path: i });
            continue;
        }
        if vs[0] != inst.source || vs[vs.len() - 1] != inst.target {
            violations.push(Violation::WrongEndpoints { path: i });
        }
        let mut seen = std::collections::HashSet::new();
        for &v in vs {
            if !seen.insert(v) {
                violations.push(Violation::RepeatedVertex { path: i, vertex: v });
            }
        }
        for w in vs.windows(2) {
            let (u, v) = (w[0], w[1]);
            match g.edge_colors(u, v) {
                None => violations.push(Violation::MissingEdge { path: i, edge: (u, v) }),
                Some(set) if !set.contains(path.color) => violations.push(Violation::EdgeLacksColor {
                    path: i,
                    edge: (u, v),
                    color: g.color_name(path.color).to_string(),
                }),
                Some(_) => {}
            }
        }
        if let Some(bound) = inst.length_bound {
            if path.len() > bound {
                violations.push(Violation::TooLong { path: i, length: path.len(), bound });
            }
        }
    }
    let mut owner: HashMap<Vertex, usize> = HashMap::new();
    for (i, path) in sol.paths.iter().enumerate() {
        for &v in path.internal() {
            if inst.is_terminal(v) {
                continue;
            }
            match owner.get(&v) {
                Some(&j) if j != i => {
                    violations.push(Violation::SharedInternalVertex { paths: (j, i), vertex: v })
                }
                Some(_) => {}
                None => {
                    owner.insert(v, i);
                }
            }
        }
    }
    for i in 0..sol.paths.len() {
        for j in i + 1..sol.paths.len() {
            let (a, b) = (&sol.paths[i], &sol.paths[j]);
            if a.vertices == b.vertices {
                violations.push(Violation::DuplicatePath { paths: (i, j) });
            }
            if sol.mode == Mode::Cddp && a.color == b.color && a.color.0 < g.color_count() {
                violations.push(Violation::DuplicateColor {
                    paths: (i, j),
                    color: g.color_name(a.color).to_string(),
                });
            }
        }
    }
    ValidationReport { violations }
}
