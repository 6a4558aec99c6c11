//! Solvers parameterized by the vertex cover of the graph.
//!
//! Both solvers first take the two-edge paths `s, v, t` greedily. What is left
//! has no such path, so every remaining solution path has at least two
//! interior vertices, one of them in the cover, and at most `2k` edges for a
//! cover of size `k`. The leftover is then solved exactly with the
//! color-coding DP under injective labels.

use crate::color_coding::{maximize, LabelingStrategy};
use crate::error::SolveError;
use crate::flow::DisjointPaths;
use crate::graph::{Color, SimpleGraph, Vertex};
use crate::instance::{Mode, PathSolution, ProblemInstance, UniColorPath};

/// Smallest vertex cover of `g` with at most `k_max` vertices, or `None`.
///
/// Bounded search tree: pick an uncovered edge and branch on its endpoints,
/// trying sizes `0, 1, ..., k_max` in turn.
pub fn minimum_vertex_cover(g: &SimpleGraph, k_max: usize) -> Option<Vec<Vertex>> {
    let edges = g.edges();
    let mut in_cover = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    for budget in 0..=k_max {
        if branch(&edges, budget, &mut in_cover, &mut chosen) {
            chosen.sort_unstable();
            return Some(chosen);
        }
    }
    None
}

fn branch(edges: &[(Vertex, Vertex)], budget: usize, in_cover: &mut [bool], chosen: &mut Vec<Vertex>) -> bool {
    let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !in_cover[u] && !in_cover[v]) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for w in [u, v] {
        in_cover[w] = true;
        chosen.push(w);
        if branch(edges, budget - 1, in_cover, chosen) {
            return true;
        }
        chosen.pop();
        in_cover[w] = false;
    }
    false
}

/// Uni-color paths `s, v, t`, scanning `v` upward and taking the first color
/// in declared order. In CDDP a color is used at most once.
pub fn greedy_length3(inst: &ProblemInstance, mode: Mode) -> PathSolution {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    let mut used = vec![false; g.color_count()];
    let mut sol = PathSolution::new(mode);
    for v in inst.interior() {
        let (Some(a), Some(b)) = (g.edge_colors(s, v), g.edge_colors(v, t)) else { continue };
        let pick = a.intersection(b).iter().find(|c| mode == Mode::Cdp || !used[c.0]);
        if let Some(c) = pick {
            used[c.0] = true;
            sol.paths.push(UniColorPath::new(vec![s, v, t], c));
        }
    }
    sol
}

/// What the exact solver reduced the instance to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcDecomposition {
    /// The direct edge, if any, followed by the greedy two-edge paths.
    pub length3_paths: PathSolution,
    /// The instance without the direct edge and the greedy interiors.
    pub residual_graph: ProblemInstance,
    /// Minimum vertex cover of the residual graph; `s` and `t` may belong.
    pub cover: Vec<Vertex>,
    pub k: usize,
}

impl VcDecomposition {
    /// Bound on the number of edges of any residual path.
    pub fn length_bound(&self) -> usize {
        2 * self.k
    }

    /// Bound on the number of residual paths: cover vertices other than `s`, `t`.
    pub fn path_bound(&self) -> usize {
        self.cover.iter().filter(|&&v| !self.residual_graph.is_terminal(v)).count()
    }
}

/// Direct edge, greedy prefix, residual and its cover, for CDP.
pub fn vc_decompose(inst: &ProblemInstance) -> Result<VcDecomposition, SolveError> {
    inst.check()?;
    inst.reject_length_bound("vertex cover solver")?;
    let (s, t) = (inst.source, inst.target);
    let mut prefix = PathSolution::new(Mode::Cdp);
    let mut graph = inst.graph.clone();
    if let Some(colors) = graph.edge_colors(s, t) {
        let c = colors.iter().next().expect("edges carry a color");
        prefix.paths.push(UniColorPath::new(vec![s, t], c));
        graph = graph.remove_edge(s, t);
    }
    let greedy = greedy_length3(inst, Mode::Cdp);
    let taken: Vec<Vertex> = greedy.paths.iter().flat_map(|p| p.internal().to_vec()).collect();
    prefix.extend(greedy);
    let residual = inst.with_graph(graph.remove_vertices(&taken)?).with_mode(Mode::Cdp);
    let simple = residual.graph.to_simple();
    let cover = minimum_vertex_cover(&simple, simple.vertex_count()).expect("all vertices form a cover");
    let k = cover.len();
    Ok(VcDecomposition { length3_paths: prefix, residual_graph: residual, cover, k })
}

/// Optimal MaxCDP, exponential only in the vertex cover of the residual.
pub fn solve_cdp_vc(inst: &ProblemInstance) -> Result<PathSolution, SolveError> {
    let dec = vc_decompose(inst)?;
    let mut sol = dec.length3_paths.clone();
    if dec.path_bound() > 0 {
        sol.extend(maximize(&dec.residual_graph, dec.length_bound(), &LabelingStrategy::Injective)?);
    }
    sol.mode = Mode::Cdp;
    Ok(sol)
}

/// The graph `H`: greedy interiors and their colors removed, then every
/// interior vertex that lies on no uni-color st-path dropped.
pub fn build_h(inst: &ProblemInstance, approx_a: &PathSolution) -> Result<ProblemInstance, SolveError> {
    let taken: Vec<Vertex> = approx_a.paths.iter().flat_map(|p| p.internal().to_vec()).collect();
    let mut used: Vec<Color> = approx_a.paths.iter().map(|p| p.color).collect();
    used.sort_unstable();
    used.dedup();
    let step1 = inst.graph.remove_vertices(&taken)?.remove_colors(&used)?;
    let h = inst.with_graph(step1);
    let dead: Vec<Vertex> = h.interior().filter(|&v| h.graph.degree(v) > 0 && !on_unicolor_path(&h, v)).collect();
    Ok(inst.with_graph(h.graph.remove_vertices(&dead)?))
}

/// Does some simple uni-color st-path pass through `v`? Per color: two
/// paths from `v`, one to `s` and one to `t`, sharing only `v`.
fn on_unicolor_path(inst: &ProblemInstance, v: Vertex) -> bool {
    let g = &inst.graph;
    let n = g.vertex_count();
    let hub = n;
    g.colors().any(|c| {
        if g.neighbors_with_color(v, c).next().is_none() {
            return false;
        }
        let mut net = DisjointPaths::new(n + 1);
        for (a, b, set) in g.edges() {
            if set.contains(c) {
                net.add_edge(a, b);
            }
        }
        net.add_edge(inst.source, hub);
        net.add_edge(inst.target, hub);
        net.solve_up_to(v, hub, 2).len() == 2
    })
}

/// Certificate of one approximation run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxCertificate {
    /// Color of the direct edge when the best branch used it.
    pub direct: Option<Color>,
    pub approx_a: PathSolution,
    pub approx_h: PathSolution,
    /// Interior vertices of `H` still on some uni-color path.
    pub h_vertices: Vec<Vertex>,
    /// Minimum vertex cover size of `H`.
    pub h_cover: usize,
}

impl ApproxCertificate {
    /// Every CDDP solution has at most this many paths.
    pub fn upper_bound(&self) -> usize {
        2 * (self.approx_a.value() + self.approx_h.value() + usize::from(self.direct.is_some()))
    }
}

/// Color-disjoint paths, at least half the optimum.
pub fn approx_cddp_vc(inst: &ProblemInstance) -> Result<(PathSolution, ApproxCertificate), SolveError> {
    inst.check()?;
    inst.reject_length_bound("vertex cover approximation")?;
    let (s, t) = (inst.source, inst.target);
    let without = inst.with_graph(inst.graph.remove_edge(s, t));
    let mut best = approx_branch(&without, None)?;
    if let Some(colors) = inst.graph.edge_colors(s, t) {
        for c in colors.iter() {
            let rest = without.with_graph(without.graph.remove_colors(&[c])?);
            let cand = approx_branch(&rest, Some(c))?;
            if cand.0.value() > best.0.value() {
                best = cand;
            }
        }
    }
    Ok(best)
}

fn approx_branch(inst: &ProblemInstance, direct: Option<Color>) -> Result<(PathSolution, ApproxCertificate), SolveError> {
    let inst = inst.clone().with_mode(Mode::Cddp);
    let approx_a = greedy_length3(&inst, Mode::Cddp);
    let h = build_h(&inst, &approx_a)?;
    let simple = h.graph.to_simple();
    let cover = minimum_vertex_cover(&simple, simple.vertex_count()).expect("all vertices form a cover");
    let interior_cover = cover.iter().filter(|&&v| !h.is_terminal(v)).count();
    let approx_h = if interior_cover == 0 {
        PathSolution::new(Mode::Cddp)
    } else {
        maximize(&h, 2 * cover.len(), &LabelingStrategy::Injective)?
    };
    let mut sol = PathSolution::new(Mode::Cddp);
    if let Some(c) = direct {
        sol.paths.push(UniColorPath::new(vec![inst.source, inst.target], c));
    }
    sol.extend(approx_a.clone());
    sol.extend(approx_h.clone());
    let h_vertices = h.interior().filter(|&v| h.graph.degree(v) > 0).collect();
    let cert = ApproxCertificate { direct, approx_a, approx_h, h_vertices, h_cover: cover.len() };
    Ok((sol, cert))
}
