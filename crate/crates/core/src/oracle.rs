//! Exhaustive ground-truth solvers.
//!
//! [`solve_exact`] enumerates every uni-color st-path, builds the conflict
//! graph between them and finds a maximum independent set by branch and
//! bound. The brute-force Independent Set and Threshold Set solvers back the
//! reduction cross-checks.

use std::collections::{HashMap, VecDeque};

use crate::bitset::BitSet;
use crate::error::SolveError;
use crate::graph::{Color, SimpleGraph, Vertex};
use crate::instance::{Mode, PathSolution, ProblemInstance, UniColorPath};
use crate::reductions::ThresholdSetInstance;

pub const DEFAULT_PATH_CAP: usize = 1_000_000;
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 24;

/// Every simple uni-color st-path, once per certifying color.
///
/// Order is deterministic: by color index, then depth-first with neighbors
/// visited in ascending order. Returns [`SolveError::Overflow`] as soon as
/// more than `cap` paths have been found.
pub fn enumerate_unicolor_paths(
    inst: &ProblemInstance,
    cap: Option<usize>,
) -> Result<Vec<UniColorPath>, SolveError> {
    inst.check()?;
    let cap = cap.unwrap_or(DEFAULT_PATH_CAP);
    let mut out = Vec::new();
    for color in inst.graph.colors() {
        enumerate_color(inst, color, cap, &mut out)?;
    }
    Ok(out)
}

/// Uni-color st-paths certified by `color` only.
pub fn enumerate_paths_of_color(
    inst: &ProblemInstance,
    color: Color,
    cap: Option<usize>,
) -> Result<Vec<UniColorPath>, SolveError> {
    inst.check()?;
    let mut out = Vec::new();
    enumerate_color(inst, color, cap.unwrap_or(DEFAULT_PATH_CAP), &mut out)?;
    Ok(out)
}

/// BFS distance to `target` in the `color` subgraph, never passing through `avoid`.
fn distances_to(inst: &ProblemInstance, color: Color, target: Vertex, avoid: Vertex) -> Vec<usize> {
    let g = &inst.graph;
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[target] = 0;
    let mut queue = VecDeque::from([target]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors_with_color(u, color) {
            if w != avoid && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn enumerate_color(
    inst: &ProblemInstance,
    color: Color,
    cap: usize,
    out: &mut Vec<UniColorPath>,
) -> Result<(), SolveError> {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    let dist = distances_to(inst, color, t, s);
    let budget = inst.length_bound.unwrap_or(usize::MAX);
    let mut on_path = vec![false; g.vertex_count()];
    on_path[s] = true;
    let mut path = vec![s];

    // Explicit stack of neighbor cursors mirrors the recursion.
    let mut cursors: Vec<usize> = vec![0];
    while let Some(cursor) = cursors.last_mut() {
        let u = *path.last().expect("path is never empty while cursors remain");
        let nbrs = g.neighbors(u);
        let mut advanced = false;
        while *cursor < nbrs.len() {
            let w = nbrs[*cursor];
            *cursor += 1;
            if on_path[w] || !g.edge_has_color(u, w, color) {
                continue;
            }
            let used = path.len(); // edges after stepping to w
            if dist[w] == usize::MAX || used + dist[w] > budget {
                continue;
            }
            if w == t {
                let mut vertices = path.clone();
                vertices.push(t);
                out.push(UniColorPath::new(vertices, color));
                if out.len() > cap {
                    return Err(SolveError::Overflow { cap });
                }
                continue;
            }
            on_path[w] = true;
            path.push(w);
            cursors.push(0);
            advanced = true;
            break;
        }
        if !advanced {
            cursors.pop();
            if let Some(u) = path.pop() {
                on_path[u] = false;
            }
        }
    }
    Ok(())
}

/// Paths with pairwise conflicts: two paths conflict when they share an
/// internal vertex, use the same vertex sequence, or (CDDP) share a color.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    pub paths: Vec<UniColorPath>,
    adjacency: Vec<BitSet>,
}

impl ConflictGraph {
    pub fn new(inst: &ProblemInstance, paths: Vec<UniColorPath>, mode: Mode) -> Self {
        let n = paths.len();
        let mut adjacency = vec![BitSet::new(n); n];
        let mut groups: HashMap<Vertex, Vec<usize>> = HashMap::new();
        let mut by_sequence: HashMap<&[Vertex], Vec<usize>> = HashMap::new();
        let mut by_color: HashMap<Color, Vec<usize>> = HashMap::new();
        for (i, p) in paths.iter().enumerate() {
            for &v in p.internal() {
                if !inst.is_terminal(v) {
                    groups.entry(v).or_default().push(i);
                }
            }
            by_sequence.entry(&p.vertices).or_default().push(i);
            if mode == Mode::Cddp {
                by_color.entry(p.color).or_default().push(i);
            }
        }
        let cliques = groups.values().chain(by_sequence.values()).chain(by_color.values());
        for members in cliques {
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }
        ConflictGraph { paths, adjacency }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn conflicts(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    /// Lexicographically smallest maximum independent set (ascending indices).
    pub fn maximum_independent_set(&self) -> Vec<usize> {
        max_independent_set(&self.adjacency)
    }
}

struct Search<'a> {
    adjacency: &'a [BitSet],
    lower: usize,
    best: Option<Vec<usize>>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn threshold(&self) -> usize {
        match &self.best {
            Some(b) => b.len() + 1,
            None => self.lower,
        }
    }

    /// Number of cliques in a greedy clique cover of `candidates`.
    fn clique_cover_bound(&self, candidates: &BitSet) -> usize {
        let mut commons: Vec<BitSet> = Vec::new();
        for v in candidates.iter() {
            match commons.iter_mut().find(|common| common.contains(v)) {
                Some(common) => common.intersect_with(&self.adjacency[v]),
                None => {
                    let mut common = self.adjacency[v].clone();
                    common.intersect_with(candidates);
                    commons.push(common);
                }
            }
        }
        commons.len()
    }

    fn run(&mut self, candidates: BitSet) {
        let Some(v) = candidates.first() else {
            if self.current.len() >= self.threshold() {
                self.best = Some(self.current.clone());
            }
            return;
        };
        if self.current.len() + candidates.len() < self.threshold() {
            return;
        }
        if self.current.len() + self.clique_cover_bound(&candidates) < self.threshold() {
            return;
        }
        // Include-first keeps the visiting order lexicographic, so the first
        // optimum found is the lexicographically smallest one.
        let mut with_v = candidates.clone();
        with_v.remove(v);
        with_v.difference_with(&self.adjacency[v]);
        self.current.push(v);
        self.run(with_v);
        self.current.pop();

        let mut without_v = candidates;
        without_v.remove(v);
        self.run(without_v);
    }
}

fn greedy_independent_set(adjacency: &[BitSet]) -> usize {
    let n = adjacency.len();
    let mut alive = BitSet::full(n);
    let mut size = 0;
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| {
                let mut nb = adjacency[v].clone();
                nb.intersect_with(&alive);
                nb.len()
            })
            .expect("alive is nonempty");
        size += 1;
        alive.remove(v);
        alive.difference_with(&adjacency[v]);
    }
    size
}

fn max_independent_set(adjacency: &[BitSet]) -> Vec<usize> {
    let n = adjacency.len();
    let mut search = Search { adjacency, lower: greedy_independent_set(adjacency), best: None, current: Vec::new() };
    search.run(BitSet::full(n));
    search.best.unwrap_or_default()
}

/// Maximum-cardinality feasible solution by exhaustive search.
pub fn solve_exact(inst: &ProblemInstance) -> Result<PathSolution, SolveError> {
    solve_exact_capped(inst, DEFAULT_PATH_CAP)
}

pub fn solve_exact_capped(inst: &ProblemInstance, cap: usize) -> Result<PathSolution, SolveError> {
    let mut paths = enumerate_unicolor_paths(inst, Some(cap))?;
    if inst.mode == Mode::Cdp {
        // One certifying color per vertex sequence is enough when colors may repeat.
        let mut seen = std::collections::HashSet::new();
        paths.retain(|p| seen.insert(p.vertices.clone()));
    }
    let conflicts = ConflictGraph::new(inst, paths, inst.mode);
    let chosen = conflicts.maximum_independent_set();
    let paths = chosen.into_iter().map(|i| conflicts.paths[i].clone()).collect();
    Ok(PathSolution::from_paths(paths, inst.mode))
}

pub fn solve_is_bruteforce(g: &SimpleGraph) -> Result<Vec<Vertex>, SolveError> {
    solve_is_bruteforce_with_limit(g, DEFAULT_BRUTE_FORCE_LIMIT)
}

/// Maximum independent set by include/exclude search over all vertices.
pub fn solve_is_bruteforce_with_limit(g: &SimpleGraph, limit: usize) -> Result<Vec<Vertex>, SolveError> {
    let n = g.vertex_count();
    if n > limit.min(64) {
        return Err(SolveError::SizeLimit { what: "independent set input", size: n, limit: limit.min(64) });
    }
    let masks: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();

    fn go(v: usize, n: usize, masks: &[u64], chosen: u64, blocked: u64, best: &mut u64) {
        if chosen.count_ones() + (n - v) as u32 <= best.count_ones() {
            return;
        }
        if v == n {
            *best = chosen;
            return;
        }
        if blocked >> v & 1 == 0 {
            go(v + 1, n, masks, chosen | 1 << v, blocked | masks[v], best);
        }
        go(v + 1, n, masks, chosen, blocked, best);
    }

    let mut best = 0u64;
    go(0, n, &masks, 0, 0, &mut best);
    Ok((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

pub fn solve_thresholdset_bruteforce(ts: &ThresholdSetInstance) -> Result<Vec<usize>, SolveError> {
    solve_thresholdset_bruteforce_with_limit(ts, DEFAULT_BRUTE_FORCE_LIMIT)
}

/// Maximum-cardinality `T` with `|T ∩ S_i| <= w(S_i)` for every set.
pub fn solve_thresholdset_bruteforce_with_limit(
    ts: &ThresholdSetInstance,
    limit: usize,
) -> Result<Vec<usize>, SolveError> {
    let u = ts.universe();
    if u > limit {
        return Err(SolveError::SizeLimit { what: "threshold set universe", size: u, limit });
    }
    let membership: Vec<Vec<usize>> =
        (0..u).map(|e| (0..ts.sets().len()).filter(|&i| ts.sets()[i].contains(&e)).collect()).collect();

    struct State<'a> {
        membership: &'a [Vec<usize>],
        weights: &'a [usize],
        counts: Vec<usize>,
        current: Vec<usize>,
        best: Option<Vec<usize>>,
    }

    fn go(e: usize, st: &mut State<'_>) {
        let n = st.membership.len();
        let best_len = st.best.as_ref().map_or(0, Vec::len);
        if st.best.is_some() && st.current.len() + (n - e) <= best_len {
            return;
        }
        if e == n {
            st.best = Some(st.current.clone());
            return;
        }
        let fits = st.membership[e].iter().all(|&i| st.counts[i] < st.weights[i]);
        if fits {
            for &i in &st.membership[e] {
                st.counts[i] += 1;
            }
            st.current.push(e);
            go(e + 1, st);
            st.current.pop();
            for &i in &st.membership[e] {
                st.counts[i] -= 1;
            }
        }
        go(e + 1, st);
    }

    let mut st = State {
        membership: &membership,
        weights: ts.weights(),
        counts: vec![0; ts.sets().len()],
        current: Vec::new(),
        best: None,
    };
    go(0, &mut st);
    Ok(st.best.unwrap_or_default())
}
