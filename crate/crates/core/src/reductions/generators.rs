//! Seeded random instances. Equal seeds give equal outputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CubicGraph, ThresholdSetInstance};
use crate::error::ReductionError;
use crate::graph::{Color, EdgeColoredGraph, SimpleGraph, Vertex};
use crate::instance::{Mode, ProblemInstance};

const CUBIC_RETRIES: usize = 10_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn color_names(q: usize) -> Vec<String> {
    (0..q).map(|i| format!("c{i}")).collect()
}

/// Between 1 and `max` distinct colors out of `q`.
fn random_colors(rng: &mut ChaCha8Rng, q: usize, max: usize) -> Vec<Color> {
    let k = rng.gen_range(1..=max.clamp(1, q));
    let mut all: Vec<usize> = (0..q).collect();
    all.shuffle(rng);
    all.truncate(k);
    all.sort_unstable();
    all.into_iter().map(Color).collect()
}

fn check_params(n: usize, q: usize) -> Result<(), ReductionError> {
    if n < 2 {
        return Err(ReductionError::Generation(format!("need at least 2 vertices, got {n}")));
    }
    if q == 0 {
        return Err(ReductionError::Generation("need at least one color".into()));
    }
    Ok(())
}

/// Pairing model: shuffle three stubs per vertex, pair them up and reject
/// loops and multi-edges.
pub fn gen_random_cubic(n: usize, seed: u64) -> Result<CubicGraph, ReductionError> {
    if n < 4 || n % 2 == 1 {
        return Err(ReductionError::Generation(format!("no cubic graph on {n} vertices")));
    }
    let mut rng = rng(seed);
    let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| [v, v, v]).collect();
    'retry: for _ in 0..CUBIC_RETRIES {
        stubs.shuffle(&mut rng);
        let mut g = SimpleGraph::new(n);
        for pair in stubs.chunks(2) {
            if pair[0] == pair[1] || !g.add_edge(pair[0], pair[1]) {
                continue 'retry;
            }
        }
        return CubicGraph::new(g);
    }
    Err(ReductionError::Generation(format!("pairing model failed {CUBIC_RETRIES} times")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomInstanceParams {
    pub vertices: usize,
    pub colors: usize,
    pub edge_prob: f64,
    /// Upper bound on the colors of a single edge.
    pub colors_per_edge: usize,
    pub length_bound: Option<usize>,
    pub mode: Mode,
}

impl Default for RandomInstanceParams {
    fn default() -> Self {
        RandomInstanceParams {
            vertices: 8,
            colors: 3,
            edge_prob: 0.35,
            colors_per_edge: 2,
            length_bound: None,
            mode: Mode::Cdp,
        }
    }
}

/// Erdős–Rényi graph with random color sets; `s = 0`, `t = n - 1`.
pub fn gen_random_instance(params: &RandomInstanceParams, seed: u64) -> Result<ProblemInstance, ReductionError> {
    let RandomInstanceParams { vertices: n, colors: q, edge_prob, colors_per_edge, .. } = *params;
    check_params(n, q)?;
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(ReductionError::Generation(format!("edge probability {edge_prob} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut graph = EdgeColoredGraph::new(n, color_names(q))?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                let colors = random_colors(&mut rng, q, colors_per_edge);
                graph.add_edge(u, v, colors)?;
            }
        }
    }
    Ok(ProblemInstance::new(graph, 0, n - 1, params.mode).with_length_bound(params.length_bound))
}

/// CDDP instance on `n` vertices whose graph minus `t = n - 1` is a random
/// recursive tree rooted at `s = 0`. Each tree vertex is joined to `t` with
/// probability one half.
pub fn gen_tree_instance(n: usize, q: usize, seed: u64) -> Result<ProblemInstance, ReductionError> {
    check_params(n, q)?;
    let mut rng = rng(seed);
    let t = n - 1;
    let mut graph = EdgeColoredGraph::new(n, color_names(q))?;
    for v in 1..t {
        let parent = rng.gen_range(0..v);
        let colors = random_colors(&mut rng, q, 2);
        graph.add_edge(parent, v, colors)?;
    }
    for v in 0..t {
        if rng.gen_bool(0.5) {
            let colors = random_colors(&mut rng, q, 2);
            graph.add_edge(v, t, colors)?;
        }
    }
    Ok(ProblemInstance::new(graph, 0, t, Mode::Cddp))
}

/// Interior split into random vertex-disjoint paths; every path vertex is
/// joined to `s` and to `t` independently with probability `attach_prob`.
/// The graph minus `s, t` is a disjoint union of paths.
fn disjoint_paths_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    interior: usize,
    q: usize,
    attach_prob: f64,
) -> Result<EdgeColoredGraph, ReductionError> {
    let (s, t) = (0, n - 1);
    let mut graph = EdgeColoredGraph::new(n, color_names(q))?;
    let mut order: Vec<Vertex> = (1..=interior).collect();
    order.shuffle(rng);
    let mut rest = &order[..];
    while !rest.is_empty() {
        let len = rng.gen_range(1..=rest.len().min(4));
        let (piece, tail) = rest.split_at(len);
        for w in piece.windows(2) {
            let colors = random_colors(rng, q, 2);
            graph.add_edge(w[0], w[1], colors)?;
        }
        rest = tail;
    }
    for v in 1..=interior {
        for end in [s, t] {
            if rng.gen_bool(attach_prob) {
                let colors = random_colors(rng, q, 2);
                graph.add_edge(end, v, colors)?;
            }
        }
    }
    if rng.gen_bool(0.2) {
        let colors = random_colors(rng, q, 1);
        graph.add_edge(s, t, colors)?;
    }
    Ok(graph)
}

/// CDP instance whose interior `G - {s, t}` is a disjoint union of paths.
pub fn gen_disjoint_paths_instance(n: usize, q: usize, seed: u64) -> Result<ProblemInstance, ReductionError> {
    check_params(n, q)?;
    let mut rng = rng(seed);
    let graph = disjoint_paths_graph(&mut rng, n, n - 2, q, 0.4)?;
    Ok(ProblemInstance::new(graph, 0, n - 1, Mode::Cdp))
}

/// CDP instance that becomes a disjoint-paths instance after deleting the
/// `extra` vertices placed right before `t`. Each of them is joined to two
/// or three random vertices, including possibly `s`, `t` and each other.
pub fn gen_near_disjoint_paths_instance(
    n: usize,
    q: usize,
    extra: usize,
    seed: u64,
) -> Result<ProblemInstance, ReductionError> {
    check_params(n, q)?;
    if extra + 2 > n {
        return Err(ReductionError::Generation(format!("{extra} extra vertices do not fit in {n}")));
    }
    let mut rng = rng(seed);
    let interior = n - 2 - extra;
    let base = disjoint_paths_graph(&mut rng, n, interior, q, 0.4)?;
    let mut graph = base;
    for x in interior + 1..n - 1 {
        let degree = rng.gen_range(2..=3);
        let mut others: Vec<Vertex> = (0..n).filter(|&v| v != x).collect();
        others.shuffle(&mut rng);
        for &v in others.iter().take(degree) {
            let colors = random_colors(&mut rng, q, 2);
            graph.add_colors(x, v, colors)?;
        }
    }
    Ok(ProblemInstance::new(graph, 0, n - 1, Mode::Cdp))
}

/// `q` nonempty random sets over `0..universe` with weights in `1..=max_weight`.
/// Some elements may be left uncovered.
pub fn gen_random_ts(
    universe: usize,
    q: usize,
    max_weight: usize,
    seed: u64,
) -> Result<ThresholdSetInstance, ReductionError> {
    if universe == 0 || max_weight == 0 {
        return Err(ReductionError::Generation("universe and weights must be positive".into()));
    }
    let mut rng = rng(seed);
    let mut sets = Vec::with_capacity(q);
    let mut weights = Vec::with_capacity(q);
    for _ in 0..q {
        let mut set: Vec<usize> = (0..universe).filter(|_| rng.gen_bool(0.5)).collect();
        if set.is_empty() {
            set.push(rng.gen_range(0..universe));
        }
        sets.push(set);
        weights.push(rng.gen_range(1..=max_weight));
    }
    ThresholdSetInstance::new(universe, sets, weights)
}
