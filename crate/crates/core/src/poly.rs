//! Polynomial special cases: single-color flow, the per-color heuristic,
//! trees (via bipartite matching) and disjoint-path interiors.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::SolveError;
use crate::flow::DisjointPaths;
use crate::graph::{Color, SimpleGraph, Vertex};
use crate::instance::{Mode, PathSolution, ProblemInstance, UniColorPath};
use crate::matching::{maximum_bipartite_matching, BipartiteGraph};

/// Maximum set of internally disjoint st-paths in the subgraph of edges
/// carrying `color`. The result is a CDP solution whatever the instance mode.
pub fn solve_single_color_flow(inst: &ProblemInstance, color: Color) -> Result<PathSolution, SolveError> {
    inst.check()?;
    inst.reject_length_bound("single-color flow")?;
    if color.0 >= inst.graph.color_count() {
        return Err(SolveError::Precondition(format!("unknown color {color}")));
    }
    let mut net = DisjointPaths::new(inst.graph.vertex_count());
    for (u, v, set) in inst.graph.edges() {
        if set.contains(color) {
            net.add_edge(u, v);
        }
    }
    let paths = net
        .solve(inst.source, inst.target)
        .into_iter()
        .map(|vertices| UniColorPath::new(vertices, color))
        .collect();
    Ok(PathSolution::from_paths(paths, Mode::Cdp))
}

/// Flow value of every color, by color index.
pub fn per_color_flow_values(inst: &ProblemInstance) -> Result<Vec<usize>, SolveError> {
    inst.graph.colors().map(|c| solve_single_color_flow(inst, c).map(|s| s.value())).collect()
}

/// Best single-color flow. Within a factor `q` of the CDP optimum; in CDDP
/// mode only one of its paths is kept.
pub fn per_color_heuristic(inst: &ProblemInstance) -> Result<PathSolution, SolveError> {
    let mut best = PathSolution::new(inst.mode);
    for c in inst.graph.colors() {
        let sol = solve_single_color_flow(inst, c)?;
        if sol.value() > best.value() {
            best.paths = sol.paths;
        }
    }
    if inst.mode == Mode::Cddp {
        best.paths.truncate(1);
    }
    Ok(best)
}

/// Left vertex of a [`TreeMatchingGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeLeft {
    /// Neighbor `y` of `s`: paths through `y` start `s, y`.
    Neighbor(Vertex),
    /// The edge `{s, t}` itself.
    DirectEdge,
}

/// Bipartite graph between the subtrees hanging off `s` and the colors.
/// `(y, c)` is an edge iff some uni-color st-path colored `c` has second vertex `y`.
#[derive(Clone, Debug)]
pub struct TreeMatchingGraph {
    pub left: Vec<TreeLeft>,
    pub right: Vec<Color>,
    pub graph: BipartiteGraph,
    witnesses: HashMap<(usize, usize), Vec<Vertex>>,
}

impl TreeMatchingGraph {
    pub fn build(inst: &ProblemInstance) -> Result<Self, SolveError> {
        inst.check()?;
        inst.reject_length_bound("tree matching")?;
        check_tree(inst)?;
        let g = &inst.graph;
        let (s, t) = (inst.source, inst.target);

        let mut left = Vec::new();
        let mut pairs: Vec<(usize, Color, Vec<Vertex>)> = Vec::new();
        for &y in g.neighbors(s) {
            if y == t {
                continue;
            }
            let l = left.len();
            left.push(TreeLeft::Neighbor(y));
            for c in g.edge_colors(s, y).expect("neighbor").iter() {
                if let Some(path) = tree_path(inst, y, c) {
                    pairs.push((l, c, path));
                }
            }
        }
        if let Some(set) = g.edge_colors(s, t) {
            let l = left.len();
            left.push(TreeLeft::DirectEdge);
            pairs.extend(set.iter().map(|c| (l, c, vec![s, t])));
        }

        let right: Vec<Color> = pairs.iter().map(|p| p.1).collect::<BTreeSet<_>>().into_iter().collect();
        let index: HashMap<Color, usize> = right.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut graph = BipartiteGraph::new(left.len(), right.len());
        let mut witnesses = HashMap::new();
        for (l, c, path) in pairs {
            graph.add_edge(l, index[&c]);
            witnesses.insert((l, index[&c]), path);
        }
        Ok(TreeMatchingGraph { left, right, graph, witnesses })
    }

    /// The st-path behind edge `(l, r)`.
    pub fn witness(&self, l: usize, r: usize) -> Option<UniColorPath> {
        self.witnesses.get(&(l, r)).map(|v| UniColorPath::new(v.clone(), self.right[r]))
    }
}

/// The component of `s` in `G - t` must be a tree. Other components never
/// meet an st-path through the tree side and are ignored.
fn check_tree(inst: &ProblemInstance) -> Result<(), SolveError> {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut stack = vec![s];
    let (mut vertices, mut degree_sum) = (0, 0);
    while let Some(u) = stack.pop() {
        vertices += 1;
        for &w in g.neighbors(u) {
            if w == t {
                continue;
            }
            degree_sum += 1;
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if degree_sum / 2 != vertices - 1 {
        return Err(SolveError::Precondition("G minus t is not a tree containing s".into()));
    }
    Ok(())
}

/// Shortest `c`-colored walk down the subtree of `y` to a vertex with a
/// `c` edge to `t`, as a full st-path.
fn tree_path(inst: &ProblemInstance, y: Vertex, c: Color) -> Option<Vec<Vertex>> {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    let mut parent = HashMap::from([(y, y)]);
    let mut queue = VecDeque::from([y]);
    while let Some(u) = queue.pop_front() {
        if g.edge_has_color(u, t, c) {
            let mut path = vec![t, u];
            let mut x = u;
            while x != y {
                x = parent[&x];
                path.push(x);
            }
            path.push(s);
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors_with_color(u, c) {
            if w != s && w != t && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Optimal MaxCDDP when `G - t` restricted to the component of `s` is a
/// tree: a maximum matching between subtrees of `s` and colors.
pub fn solve_tree_cddp(inst: &ProblemInstance) -> Result<PathSolution, SolveError> {
    let tm = TreeMatchingGraph::build(inst)?;
    let paths = maximum_bipartite_matching(&tm.graph)
        .into_iter()
        .map(|(l, r)| tm.witness(l, r).expect("matched edges have witnesses"))
        .collect();
    Ok(PathSolution::from_paths(paths, Mode::Cddp))
}

/// Components of `G - {s, t}` as vertex sequences, each read from its
/// smaller endpoint, ordered by first vertex. `None` unless every component
/// is a simple path. Vertices listed in `ignore` are skipped entirely.
pub fn interior_paths(inst: &ProblemInstance, ignore: &[Vertex]) -> Option<Vec<Vec<Vertex>>> {
    let n = inst.graph.vertex_count();
    let mut skip = vec![false; n];
    skip[inst.source] = true;
    skip[inst.target] = true;
    for &v in ignore {
        skip[v] = true;
    }
    let mut interior = SimpleGraph::new(n);
    for (u, v, _) in inst.graph.edges() {
        if !skip[u] && !skip[v] {
            interior.add_edge(u, v);
        }
    }
    if (0..n).any(|v| interior.degree(v) > 2) {
        return None;
    }
    let mut seen = skip.clone();
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] || interior.degree(start) > 1 {
            continue;
        }
        let mut path = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(&next) = interior.neighbors(cur).iter().find(|&&w| !seen[w]) {
            seen[next] = true;
            path.push(next);
            cur = next;
        }
        out.push(path);
    }
    // Anything unvisited lies on a cycle.
    if seen.iter().any(|&x| !x) {
        return None;
    }
    Some(out)
}

/// Uni-color path `s, run[i..=j], t` (or reversed) with `i <= j`, trying the
/// forward direction first, then colors in order.
fn segment_path(inst: &ProblemInstance, run: &[Vertex], i: usize, j: usize) -> Option<UniColorPath> {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    for forward in [true, false] {
        let mut vertices = vec![s];
        if forward {
            vertices.extend_from_slice(&run[i..=j]);
        } else {
            vertices.extend(run[i..=j].iter().rev());
        }
        vertices.push(t);
        let first = g.edge_colors(vertices[0], vertices[1]);
        let Some(first) = first else { continue };
        let color = first.iter().find(|&c| vertices.windows(2).all(|w| g.edge_has_color(w[0], w[1], c)));
        if let Some(c) = color {
            return Some(UniColorPath::new(vertices, c));
        }
    }
    None
}

fn disjoint_paths_precheck(inst: &ProblemInstance) -> Result<Vec<Vec<Vertex>>, SolveError> {
    inst.check()?;
    inst.reject_length_bound("disjoint-paths solver")?;
    interior_paths(inst, &[]).ok_or_else(|| SolveError::Precondition("interior is not disjoint paths".into()))
}

fn direct_edge_path(inst: &ProblemInstance) -> Option<UniColorPath> {
    let set = inst.graph.edge_colors(inst.source, inst.target)?;
    set.iter().next().map(|c| UniColorPath::new(vec![inst.source, inst.target], c))
}

/// Optimal MaxCDP when `G - {s, t}` is a disjoint union of paths.
///
/// On each induced path every uni-color st-path occupies a contiguous
/// segment, so the problem is interval scheduling: repeatedly take the
/// path whose segment ends earliest, preferring the shortest on ties.
pub fn solve_disjoint_paths_cdp(inst: &ProblemInstance) -> Result<PathSolution, SolveError> {
    let runs = disjoint_paths_precheck(inst)?;
    Ok(disjoint_paths_greedy(inst, &runs))
}

pub(crate) fn disjoint_paths_greedy(inst: &ProblemInstance, runs: &[Vec<Vertex>]) -> PathSolution {
    let mut sol = PathSolution::new(Mode::Cdp);
    sol.paths.extend(direct_edge_path(inst));
    for run in runs {
        let mut start = 0;
        'scan: for j in 0..run.len() {
            for i in (start..=j).rev() {
                if let Some(p) = segment_path(inst, run, i, j) {
                    sol.paths.push(p);
                    start = j + 1;
                    continue 'scan;
                }
            }
        }
    }
    sol
}

/// Literal shortest-first greedy: repeatedly take a shortest uni-color
/// st-path inside one induced path, ties by smaller start position, then
/// direction, then color. Not optimal when edges carry several colors:
/// a short path of one color can straddle two longer paths of others.
pub fn solve_disjoint_paths_shortest_first(inst: &ProblemInstance) -> Result<PathSolution, SolveError> {
    let runs = disjoint_paths_precheck(inst)?;
    let mut sol = PathSolution::new(Mode::Cdp);
    sol.paths.extend(direct_edge_path(inst));
    for run in &runs {
        let mut free = vec![true; run.len()];
        loop {
            let mut best: Option<(usize, usize, UniColorPath)> = None;
            for i in 0..run.len() {
                for j in i..run.len() {
                    if !free[j] {
                        break;
                    }
                    if best.as_ref().is_some_and(|b| b.1 - b.0 <= j - i) {
                        break;
                    }
                    if let Some(p) = segment_path(inst, run, i, j) {
                        best = Some((i, j, p));
                        break;
                    }
                }
            }
            let Some((i, j, p)) = best else { break };
            free[i..=j].iter_mut().for_each(|f| *f = false);
            sol.paths.push(p);
        }
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig2;
    use crate::graph::EdgeColoredGraph;
    use crate::instance::validate_solution;
    use crate::oracle::solve_exact;

    fn instance(n: usize, colors: &[&str], edges: &[(Vertex, Vertex, &[&str])], mode: Mode) -> ProblemInstance {
        let mut g = EdgeColoredGraph::new(n, colors.iter().copied()).unwrap();
        for &(u, v, names) in edges {
            g.add_edge_named(u, v, names).unwrap();
        }
        ProblemInstance::new(g, 0, n - 1, mode)
    }

    #[test]
    fn flow_on_fig2() {
        let inst = fig2().with_mode(Mode::Cdp);
        let red = solve_single_color_flow(&inst, Color(0)).unwrap();
        assert_eq!(red.value(), 2);
        assert!(validate_solution(&inst, &red).is_valid());
        assert_eq!(per_color_flow_values(&inst).unwrap(), vec![2, 1]);
        assert_eq!(per_color_heuristic(&inst).unwrap().value(), 2);
        assert_eq!(per_color_heuristic(&fig2()).unwrap().value(), 1);
        assert!(solve_single_color_flow(&inst, Color(5)).is_err());
        assert!(solve_single_color_flow(&inst.clone().with_length_bound(Some(2)), Color(0)).is_err());
    }

    #[test]
    fn per_color_worst_case() {
        let inst = instance(
            5,
            &["a", "b", "c"],
            &[(0, 1, &["a"]), (1, 4, &["a"]), (0, 2, &["b"]), (2, 4, &["b"]), (0, 3, &["c"]), (3, 4, &["c"])],
            Mode::Cdp,
        );
        assert_eq!(per_color_heuristic(&inst).unwrap().value(), 1);
        assert_eq!(solve_exact(&inst).unwrap().value(), 3);
    }

    #[test]
    fn tree_examples() {
        let two = instance(
            4,
            &["c1", "c2"],
            &[(0, 1, &["c1"]), (0, 2, &["c2"]), (1, 3, &["c1"]), (2, 3, &["c2"])],
            Mode::Cddp,
        );
        assert_eq!(solve_tree_cddp(&two).unwrap().value(), 2);
        let shared = instance(3, &["c1", "c2"], &[(0, 1, &["c1", "c2"]), (1, 2, &["c1", "c2"])], Mode::Cddp);
        assert_eq!(solve_tree_cddp(&shared).unwrap().value(), 1);
        assert_eq!(solve_tree_cddp(&fig2()).unwrap().value(), 2);
    }

    #[test]
    fn tree_uses_deep_vertices_and_direct_edge() {
        // s-1-2 red, 2-t red, s-t red and green.
        let inst = instance(4, &["red", "green"], &[(0, 1, &["red"]), (1, 2, &["red"]), (2, 3, &["red"]), (0, 3, &["red", "green"])], Mode::Cddp);
        let tm = TreeMatchingGraph::build(&inst).unwrap();
        assert_eq!(tm.left, vec![TreeLeft::Neighbor(1), TreeLeft::DirectEdge]);
        assert_eq!(tm.graph.edge_count(), 3);
        let sol = solve_tree_cddp(&inst).unwrap();
        assert_eq!(sol.value(), 2);
        assert!(validate_solution(&inst, &sol).is_valid());
    }

    #[test]
    fn tree_rejects_cycles() {
        let inst = instance(4, &["a"], &[(0, 1, &["a"]), (1, 2, &["a"]), (0, 2, &["a"]), (2, 3, &["a"])], Mode::Cddp);
        let err = solve_tree_cddp(&inst).unwrap_err();
        assert!(err.to_string().contains("not a tree"));
    }

    #[test]
    fn two_short_paths_beat_one_long() {
        let inst = instance(
            4,
            &["c"],
            &[(0, 1, &["c"]), (1, 3, &["c"]), (0, 2, &["c"]), (2, 3, &["c"]), (1, 2, &["c"])],
            Mode::Cdp,
        );
        assert_eq!(solve_disjoint_paths_cdp(&inst).unwrap().value(), 2);
        assert_eq!(solve_disjoint_paths_shortest_first(&inst).unwrap().value(), 2);
    }

    #[test]
    fn no_path_gives_zero() {
        let inst = instance(4, &["c"], &[(0, 1, &["c"]), (1, 2, &["c"])], Mode::Cdp);
        assert_eq!(solve_disjoint_paths_cdp(&inst).unwrap().value(), 0);
    }

    #[test]
    fn shortest_first_can_lose() {
        // Interior path 1-2-3-4-5-6. Colors a and b give two length-4 paths
        // on 1..3 and 4..6; color c gives a length-3 path over 3-4.
        let inst = instance(
            8,
            &["a", "b", "c"],
            &[
                (0, 1, &["a"]),
                (1, 2, &["a"]),
                (2, 3, &["a"]),
                (3, 7, &["a"]),
                (0, 4, &["b"]),
                (4, 5, &["b"]),
                (5, 6, &["b"]),
                (6, 7, &["b"]),
                (0, 3, &["c"]),
                (3, 4, &["c"]),
                (4, 7, &["c"]),
            ],
            Mode::Cdp,
        );
        assert_eq!(solve_exact(&inst).unwrap().value(), 2);
        assert_eq!(solve_disjoint_paths_cdp(&inst).unwrap().value(), 2);
        assert_eq!(solve_disjoint_paths_shortest_first(&inst).unwrap().value(), 1);
    }

    #[test]
    fn disjoint_paths_preconditions() {
        let star = instance(6, &["c"], &[(1, 2, &["c"]), (1, 3, &["c"]), (1, 4, &["c"]), (0, 1, &["c"])], Mode::Cdp);
        assert!(solve_disjoint_paths_cdp(&star).is_err());
        let cycle = instance(5, &["c"], &[(1, 2, &["c"]), (2, 3, &["c"]), (3, 1, &["c"])], Mode::Cdp);
        assert!(interior_paths(&cycle, &[]).is_none());
        assert_eq!(solve_disjoint_paths_cdp(&fig2()).unwrap().value(), 2);
        assert_eq!(interior_paths(&fig2(), &[]).unwrap(), vec![vec![1], vec![2]]);
    }
}
