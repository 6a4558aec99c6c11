//! MaxCDP on graphs close to disjoint paths.
//!
//! With a deletion set `X` such that `G - X - {s, t}` is a disjoint union of
//! paths, every solution path touching `X` is made of its `X` vertices and
//! at most `|X_i| + 1` contiguous interior segments. The solver guesses the
//! pairwise disjoint `X`-touching paths, checks each guess for a uni-color
//! assembly, and solves what is left with the disjoint-paths greedy.

use std::collections::BTreeSet;

use crate::error::SolveError;
use crate::graph::{Color, EdgeColoredGraph, SimpleGraph, Vertex};
use crate::instance::{Mode, PathSolution, ProblemInstance, UniColorPath};
use crate::poly::{disjoint_paths_greedy, interior_paths};

/// Upper bound on the uncolored st-paths scanned while building guesses.
pub const DEFAULT_GUESS_CAP: usize = 2_000_000;

/// True iff every vertex has degree at most 2 and there is no cycle.
pub fn is_disjoint_paths(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if (0..n).any(|v| g.degree(v) > 2) {
        return false;
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    g.edge_count() + components == n
}

/// Smallest set `Y` drawn from `candidates` (lexicographically first among
/// equal sizes, at most `d_max` vertices) such that `g` minus `removed` and
/// `Y` is a disjoint union of paths.
pub fn min_deletion_set(
    g: &SimpleGraph,
    removed: &[Vertex],
    candidates: &[Vertex],
    d_max: usize,
) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let check = |extra: &[Vertex]| {
        let mut gone = vec![false; n];
        for &v in removed.iter().chain(extra) {
            gone[v] = true;
        }
        let kept: Vec<(Vertex, Vertex)> = g.edges().into_iter().filter(|&(u, v)| !gone[u] && !gone[v]).collect();
        is_disjoint_paths(&SimpleGraph::from_edges(n, &kept))
    };
    for size in 0..=d_max.min(candidates.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let chosen: Vec<Vertex> = idx.iter().map(|&i| candidates[i]).collect();
            if check(&chosen) {
                return Some(chosen);
            }
            // Next combination in lexicographic order.
            let Some(pos) = (0..size).rev().find(|&p| idx[p] < candidates.len() - size + p) else { break };
            idx[pos] += 1;
            for p in pos + 1..size {
                idx[p] = idx[p - 1] + 1;
            }
        }
    }
    None
}

/// Deletion set `X` together with the paths of `G - X - {s, t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionSet {
    pub vertices: Vec<Vertex>,
    /// Each induced path read from its smaller endpoint.
    pub interior_paths: Vec<Vec<Vertex>>,
}

impl DeletionSet {
    /// Checks that `vertices` is a valid deletion set for `inst`.
    pub fn new(inst: &ProblemInstance, vertices: Vec<Vertex>) -> Result<Self, SolveError> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= inst.graph.vertex_count() || inst.is_terminal(v)) {
            return Err(SolveError::Precondition(format!("vertex {v} cannot be in the deletion set")));
        }
        let interior_paths = interior_paths(inst, &vertices).ok_or_else(|| {
            SolveError::Precondition(format!("removing {vertices:?} does not leave disjoint paths"))
        })?;
        Ok(DeletionSet { vertices, interior_paths })
    }
}

/// Smallest deletion set of at most `d_max` vertices, `s` and `t` removed
/// for free.
pub fn find_deletion_set(inst: &ProblemInstance, d_max: usize) -> Option<DeletionSet> {
    let g = inst.graph.to_simple();
    let interior: Vec<Vertex> = inst.interior().collect();
    let x = min_deletion_set(&g, &[inst.source, inst.target], &interior, d_max)?;
    DeletionSet::new(inst, x).ok()
}

/// The pieces of one guessed path: its deletion-set vertices and its
/// interior segments, each segment in induced-path order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PieceAssignment {
    pub x: Vec<Vertex>,
    pub segments: Vec<Vec<Vertex>>,
}

impl PieceAssignment {
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.x.iter().copied().chain(self.segments.iter().flatten().copied())
    }
}

/// First uni-color st-path through exactly the given pieces, trying colors
/// in order, then every ordering of the pieces and both orientations of
/// each segment.
pub fn assemble_unicolor_path(
    g: &EdgeColoredGraph,
    s: Vertex,
    t: Vertex,
    pieces: &PieceAssignment,
) -> Option<UniColorPath> {
    let all: Vec<Vec<Vertex>> = pieces.x.iter().map(|&x| vec![x]).chain(pieces.segments.iter().cloned()).collect();
    for c in g.colors() {
        let internal_ok = all.iter().all(|p| p.windows(2).all(|w| g.edge_has_color(w[0], w[1], c)));
        if !internal_ok {
            continue;
        }
        let mut used = vec![false; all.len()];
        let mut route = vec![s];
        if order_pieces(g, t, c, &all, &mut used, &mut route) {
            return Some(UniColorPath::new(route, c));
        }
    }
    None
}

fn order_pieces(
    g: &EdgeColoredGraph,
    t: Vertex,
    c: Color,
    pieces: &[Vec<Vertex>],
    used: &mut [bool],
    route: &mut Vec<Vertex>,
) -> bool {
    let end = *route.last().expect("route starts at s");
    if used.iter().all(|&u| u) {
        if g.edge_has_color(end, t, c) {
            route.push(t);
            return true;
        }
        return false;
    }
    for i in 0..pieces.len() {
        if used[i] {
            continue;
        }
        let p = &pieces[i];
        let orientations: &[bool] = if p.len() > 1 { &[false, true] } else { &[false] };
        for &reversed in orientations {
            let first = if reversed { p[p.len() - 1] } else { p[0] };
            if !g.edge_has_color(end, first, c) {
                continue;
            }
            let before = route.len();
            if reversed {
                route.extend(p.iter().rev());
            } else {
                route.extend(p.iter());
            }
            used[i] = true;
            if order_pieces(g, t, c, pieces, used, route) {
                return true;
            }
            used[i] = false;
            route.truncate(before);
        }
    }
    false
}

/// Piece sets of every simple st-path that touches `X`, deduplicated.
fn guess_piece_sets(
    inst: &ProblemInstance,
    ds: &DeletionSet,
    cap: usize,
) -> Result<Vec<PieceAssignment>, SolveError> {
    let g = &inst.graph;
    let n = g.vertex_count();
    let mut in_x = vec![false; n];
    for &x in &ds.vertices {
        in_x[x] = true;
    }
    // Position of each interior vertex: (induced path, index along it).
    let mut position = vec![(usize::MAX, 0); n];
    for (r, run) in ds.interior_paths.iter().enumerate() {
        for (i, &v) in run.iter().enumerate() {
            position[v] = (r, i);
        }
    }

    struct Walk<'a> {
        inst: &'a ProblemInstance,
        in_x: &'a [bool],
        position: &'a [(usize, usize)],
        on_path: Vec<bool>,
        route: Vec<Vertex>,
        found: BTreeSet<PieceAssignment>,
        scanned: usize,
        cap: usize,
    }

    impl Walk<'_> {
        fn go(&mut self, u: Vertex) -> Result<(), SolveError> {
            let t = self.inst.target;
            for &w in self.inst.graph.neighbors(u) {
                if w == t {
                    if self.route.iter().any(|&v| self.in_x[v]) {
                        self.scanned += 1;
                        if self.scanned > self.cap {
                            return Err(SolveError::SizeLimit {
                                what: "deletion-set guess enumeration",
                                size: self.scanned,
                                limit: self.cap,
                            });
                        }
                        let pieces = self.pieces();
                        self.found.insert(pieces);
                    }
                } else if w != self.inst.source && !self.on_path[w] {
                    self.on_path[w] = true;
                    self.route.push(w);
                    self.go(w)?;
                    self.route.pop();
                    self.on_path[w] = false;
                }
            }
            Ok(())
        }

        fn pieces(&self) -> PieceAssignment {
            let mut x = Vec::new();
            let mut segments = Vec::new();
            let mut current: Vec<Vertex> = Vec::new();
            for &v in &self.route {
                if self.in_x[v] {
                    x.push(v);
                    if !current.is_empty() {
                        segments.push(std::mem::take(&mut current));
                    }
                } else {
                    current.push(v);
                }
            }
            if !current.is_empty() {
                segments.push(current);
            }
            for seg in &mut segments {
                seg.sort_by_key(|&v| self.position[v]);
            }
            x.sort_unstable();
            segments.sort();
            PieceAssignment { x, segments }
        }
    }

    let mut walk = Walk {
        inst,
        in_x: &in_x,
        position: &position,
        on_path: vec![false; n],
        route: Vec::new(),
        found: BTreeSet::new(),
        scanned: 0,
        cap,
    };
    walk.on_path[inst.source] = true;
    walk.go(inst.source)?;
    Ok(walk.found.into_iter().collect())
}

/// Optimal MaxCDP given a valid deletion set.
pub fn solve_xp_cdp(inst: &ProblemInstance, ds: &DeletionSet) -> Result<PathSolution, SolveError> {
    solve_xp_cdp_capped(inst, ds, DEFAULT_GUESS_CAP)
}

pub fn solve_xp_cdp_capped(inst: &ProblemInstance, ds: &DeletionSet, cap: usize) -> Result<PathSolution, SolveError> {
    inst.check()?;
    inst.reject_length_bound("XP solver")?;
    if DeletionSet::new(inst, ds.vertices.clone())? != *ds {
        return Err(SolveError::Precondition("deletion set does not match the instance".into()));
    }

    // Assembled X-touching paths, one per distinct vertex set.
    let mut candidates: Vec<(Vec<Vertex>, UniColorPath)> = Vec::new();
    let mut seen_sets = BTreeSet::new();
    for pieces in guess_piece_sets(inst, ds, cap)? {
        let mut vs: Vec<Vertex> = pieces.vertices().collect();
        vs.sort_unstable();
        if seen_sets.contains(&vs) {
            continue;
        }
        if let Some(path) = assemble_unicolor_path(&inst.graph, inst.source, inst.target, &pieces) {
            seen_sets.insert(vs.clone());
            candidates.push((vs, path));
        }
    }

    let mut search = GuessSearch {
        inst,
        x: &ds.vertices,
        candidates: &candidates,
        chosen: Vec::new(),
        used: vec![false; inst.graph.vertex_count()],
        best: None,
    };
    search.go(0);
    Ok(search.best.expect("the empty guess is always evaluated"))
}

struct GuessSearch<'a> {
    inst: &'a ProblemInstance,
    x: &'a [Vertex],
    candidates: &'a [(Vec<Vertex>, UniColorPath)],
    chosen: Vec<usize>,
    used: Vec<bool>,
    best: Option<PathSolution>,
}

impl GuessSearch<'_> {
    fn go(&mut self, from: usize) {
        self.evaluate();
        for i in from..self.candidates.len() {
            let vs = &self.candidates[i].0;
            if vs.iter().any(|&v| self.used[v]) {
                continue;
            }
            for &v in vs {
                self.used[v] = true;
            }
            self.chosen.push(i);
            self.go(i + 1);
            self.chosen.pop();
            for &v in vs {
                self.used[v] = false;
            }
        }
    }

    fn evaluate(&mut self) {
        let mut removed: Vec<Vertex> = self.x.to_vec();
        removed.extend((0..self.used.len()).filter(|&v| self.used[v]));
        let graph = self.inst.graph.remove_vertices(&removed).expect("vertices in range");
        let residual = self.inst.with_graph(graph);
        let runs = interior_paths(&residual, &[]).expect("subgraph of disjoint paths");
        let mut sol = PathSolution::from_paths(
            self.chosen.iter().map(|&i| self.candidates[i].1.clone()).collect(),
            Mode::Cdp,
        );
        sol.extend(disjoint_paths_greedy(&residual, &runs));
        if self.best.as_ref().is_none_or(|b| sol.value() > b.value()) {
            self.best = Some(sol);
        }
    }
}
