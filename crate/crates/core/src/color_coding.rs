//! Color coding for length-bounded MaxCDDP and MaxCDP.
//!
//! A labeling gives every interior vertex a label in `0..h_v` and every
//! color a label in `0..h_c`. Table `S` records, per color `λ` and vertex
//! `u`, the label sets `L` such that some `λ`-path from `s` to `u` has
//! internal labels exactly `L`, all distinct. Table `Π` combines
//! `t`-adjacent entries of `S` into `z` paths with pairwise disjoint label
//! sets and, for CDDP, pairwise distinct color labels. Distinct labels
//! imply disjoint paths, so every accepting run yields a feasible witness.
//!
//! Both tables are stored sparsely: only reachable entries are kept.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::SolveError;
use crate::graph::{Color, Vertex};
use crate::instance::{validate_solution, Mode, PathSolution, ProblemInstance, UniColorPath};

/// Largest label alphabet a bitmask can hold.
pub const MAX_LABELS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    /// `None` for `s` and `t`.
    pub vertex_labels: Vec<Option<u8>>,
    pub color_labels: Vec<u8>,
    pub h_v: usize,
    pub h_c: usize,
}

impl Labeling {
    fn vertex_bit(&self, v: Vertex) -> u64 {
        1 << self.vertex_labels[v].expect("interior vertex")
    }

    fn color_bit(&self, c: Color) -> u64 {
        1 << self.color_labels[c.0]
    }

    fn full_vertex_mask(&self) -> u64 {
        mask_of_size(self.h_v)
    }

    fn full_color_mask(&self) -> u64 {
        mask_of_size(self.h_c)
    }
}

fn mask_of_size(h: usize) -> u64 {
    if h >= 64 {
        u64::MAX
    } else {
        (1u64 << h) - 1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LabelingStrategy {
    /// Independent uniform labelings.
    Random { trials: usize, seed: u64 },
    /// One labeling that is perfect for the given solution.
    Witness(PathSolution),
    /// Every interior vertex and every color gets its own label. The DP is
    /// then exact, at the price of `h_v = n - 2` and `h_c = q`.
    Injective,
}

/// When the DP accepts target `k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Acceptance {
    /// Some `Π[L', M, k]` holds.
    #[default]
    AnySubset,
    /// `Π[L_v, L_c, k]` holds: the paths use every label.
    FullLabelSet,
}

/// `ln(1/δ) · e^{k(l-1)} · e^k`, rounded up: trials after which a fixed
/// solution has been labeled perfectly at least once with probability `1 - δ`.
pub fn recommended_trials(k: usize, l: usize, delta: f64) -> f64 {
    let exponent = (k * l.saturating_sub(1) + k) as f64;
    ((1.0 / delta).ln() * exponent.exp()).ceil()
}

/// Alphabet sizes used for target `k`: `h_v = k(l-1)` capped by the number
/// of interior vertices, `h_c = k` capped by the number of colors.
pub fn label_sizes(inst: &ProblemInstance, l: usize, k: usize) -> (usize, usize) {
    let interior = inst.graph.vertex_count().saturating_sub(2);
    let h_v = (k * l.saturating_sub(1)).min(interior).max(1);
    let h_c = k.min(inst.graph.color_count()).max(1);
    (h_v, h_c)
}

/// Labelings for target `k` and bound `l`, in a reproducible order.
pub fn generate_labelings<'a>(
    inst: &'a ProblemInstance,
    l: usize,
    k: usize,
    strategy: &LabelingStrategy,
) -> Result<Box<dyn Iterator<Item = Labeling> + 'a>, SolveError> {
    let n = inst.graph.vertex_count();
    let q = inst.graph.color_count();
    let terminal = |v: Vertex| inst.is_terminal(v);
    match strategy {
        LabelingStrategy::Random { trials, seed } => {
            let (h_v, h_c) = label_sizes(inst, l, k);
            check_width(h_v)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let labeling = move || Labeling {
                vertex_labels: (0..n).map(|v| (!terminal(v)).then(|| rng.gen_range(0..h_v) as u8)).collect(),
                color_labels: (0..q).map(|_| rng.gen_range(0..h_c) as u8).collect(),
                h_v,
                h_c,
            };
            Ok(Box::new(std::iter::repeat_with(labeling).take(*trials)))
        }
        LabelingStrategy::Witness(sol) => {
            // Exactly the witness's labels, so that full-set acceptance asks
            // for a path set covering the same labels. Either alphabet is
            // empty when the witness has no interior vertex or no path.
            let internal: Vec<Vertex> = sol.paths.iter().flat_map(|p| p.internal().to_vec()).collect();
            let mut colors: Vec<Color> = sol.paths.iter().map(|p| p.color).collect();
            colors.sort_unstable();
            colors.dedup();
            let (h_v, h_c) = (internal.len(), colors.len());
            check_width(h_v)?;
            let mut vertex_labels: Vec<Option<u8>> = (0..n).map(|v| (!terminal(v)).then_some(0)).collect();
            for (i, &v) in internal.iter().enumerate() {
                vertex_labels[v] = Some(i as u8);
            }
            let mut color_labels = vec![0u8; q];
            for (i, c) in colors.iter().enumerate() {
                color_labels[c.0] = i as u8;
            }
            Ok(Box::new(std::iter::once(Labeling { vertex_labels, color_labels, h_v, h_c })))
        }
        LabelingStrategy::Injective => {
            let h_v = n.saturating_sub(2).max(1);
            let h_c = q.max(1);
            check_width(h_v)?;
            let mut next = 0u8;
            let vertex_labels = (0..n)
                .map(|v| {
                    (!terminal(v)).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect();
            let color_labels = (0..q).map(|c| c as u8).collect();
            Ok(Box::new(std::iter::once(Labeling { vertex_labels, color_labels, h_v, h_c })))
        }
    }
}

fn check_width(h_v: usize) -> Result<(), SolveError> {
    if h_v > MAX_LABELS {
        return Err(SolveError::SizeLimit { what: "vertex label alphabet", size: h_v, limit: MAX_LABELS });
    }
    Ok(())
}

/// `S[·, ·, λ]` for one color: the label sets reachable at each vertex.
#[derive(Clone, Debug)]
pub struct TableS {
    color: Color,
    entries: Vec<HashSet<u64>>,
}

impl TableS {
    pub fn get(&self, labels: u64, u: Vertex) -> bool {
        self.entries[u].contains(&labels)
    }

    pub fn color(&self) -> Color {
        self.color
    }

    /// Label sets recorded at `u`, ascending.
    pub fn entries_at(&self, u: Vertex) -> Vec<u64> {
        let mut v: Vec<u64> = self.entries[u].iter().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Fills `S` for color `λ` with label sets of size at most `max_internal`.
pub fn compute_table_s(inst: &ProblemInstance, labeling: &Labeling, color: Color, max_internal: usize) -> TableS {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    let mut entries = vec![HashSet::new(); g.vertex_count()];
    entries[s].insert(0u64);
    let mut frontier = vec![(s, 0u64)];
    for _ in 0..max_internal {
        let mut next = Vec::new();
        for &(w, mask) in &frontier {
            for u in g.neighbors_with_color(w, color) {
                if u == s || u == t {
                    continue;
                }
                let bit = labeling.vertex_bit(u);
                if mask & bit == 0 && entries[u].insert(mask | bit) {
                    next.push((u, mask | bit));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    TableS { color, entries }
}

/// Rebuilds the path behind `S[labels, u, λ] = 1`, from `s` to `u`.
fn extract_s_path(inst: &ProblemInstance, labeling: &Labeling, table: &TableS, labels: u64, u: Vertex) -> Vec<Vertex> {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    let mut path = vec![u];
    let (mut cur, mut mask) = (u, labels);
    while cur != s {
        mask &= !labeling.vertex_bit(cur);
        cur = g
            .neighbors_with_color(cur, table.color)
            .find(|&w| w != t && table.get(mask, w) && (w != s || mask == 0))
            .expect("S entries have predecessors");
        path.push(cur);
    }
    path.reverse();
    path
}

/// A `Π` entry: vertex labels used, color labels used, direct edge used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiState {
    pub vertex_labels: u64,
    pub color_labels: u64,
    pub direct: bool,
}

#[derive(Clone, Copy, Debug)]
struct Back {
    prev: PiState,
    color: Color,
    labels: u64,
}

/// Layers `Π[·, ·, z]` for `z = 0..`, with back pointers for witnesses.
#[derive(Clone, Debug)]
pub struct TablePi {
    mode: Mode,
    layers: Vec<HashMap<PiState, Option<Back>>>,
    tables: Vec<TableS>,
    /// Per color, the `t`-adjacent label sets of `S` with their end vertex.
    ends: Vec<Vec<(u64, Vertex)>>,
}

impl TablePi {
    /// Any-subset query. In CDP mode `color_labels` is ignored.
    pub fn get(&self, vertex_labels: u64, color_labels: u64, z: usize) -> bool {
        let Some(layer) = self.layers.get(z) else { return false };
        layer.keys().any(|st| {
            st.vertex_labels == vertex_labels && (self.mode == Mode::Cdp || st.color_labels == color_labels)
        })
    }

    /// Largest `z` with a nonempty layer.
    pub fn max_paths(&self) -> usize {
        self.layers.iter().rposition(|layer| !layer.is_empty()).unwrap_or(0)
    }

    pub fn layer_states(&self, z: usize) -> Vec<PiState> {
        let mut v: Vec<PiState> = self.layers.get(z).map(|l| l.keys().copied().collect()).unwrap_or_default();
        v.sort_unstable();
        v
    }

    fn accepting_state(&self, labeling: &Labeling, z: usize, acceptance: Acceptance) -> Option<PiState> {
        self.layer_states(z).into_iter().find(|st| match acceptance {
            Acceptance::AnySubset => true,
            Acceptance::FullLabelSet => {
                st.vertex_labels == labeling.full_vertex_mask()
                    && (self.mode == Mode::Cdp || st.color_labels == labeling.full_color_mask())
            }
        })
    }

    fn witness(&self, inst: &ProblemInstance, labeling: &Labeling, z: usize, mut state: PiState) -> PathSolution {
        let mut paths = Vec::with_capacity(z);
        for layer in self.layers[1..=z].iter().rev() {
            let back = layer[&state].expect("nonzero layers have back pointers");
            let table = &self.tables[back.color.0];
            let &(_, end) = self.ends[back.color.0]
                .iter()
                .find(|&&(labels, _)| labels == back.labels)
                .expect("recorded end");
            let mut vertices = extract_s_path(inst, labeling, table, back.labels, end);
            vertices.push(inst.target);
            paths.push(UniColorPath::new(vertices, back.color));
            state = back.prev;
        }
        paths.reverse();
        PathSolution::from_paths(paths, self.mode)
    }
}

/// Fills `S` for every color and `Π` for `z` up to `k_max`, stopping early
/// at the first empty layer.
pub fn compute_table_pi(
    inst: &ProblemInstance,
    labeling: &Labeling,
    l: usize,
    k_max: usize,
    mode: Mode,
) -> TablePi {
    let g = &inst.graph;
    let (s, t) = (inst.source, inst.target);
    let max_internal = l.saturating_sub(1);
    let mut tables = Vec::with_capacity(g.color_count());
    let mut ends = Vec::with_capacity(g.color_count());
    for c in g.colors() {
        let reaches_t = g.neighbors_with_color(t, c).next().is_some();
        let table = if reaches_t {
            compute_table_s(inst, labeling, c, max_internal)
        } else {
            TableS { color: c, entries: vec![HashSet::new(); g.vertex_count()] }
        };
        let mut e: Vec<(u64, Vertex)> = Vec::new();
        let mut seen = HashSet::new();
        for u in g.neighbors_with_color(t, c) {
            if u != s && inst.is_terminal(u) {
                continue;
            }
            for labels in table.entries_at(u) {
                if seen.insert(labels) {
                    e.push((labels, u));
                }
            }
        }
        e.sort_unstable();
        tables.push(table);
        ends.push(e);
    }

    let start = PiState { vertex_labels: 0, color_labels: 0, direct: false };
    let mut layers = vec![HashMap::from([(start, None)])];
    for _ in 0..k_max {
        let prev = layers.last().expect("layer 0");
        let mut states: Vec<PiState> = prev.keys().copied().collect();
        states.sort_unstable();
        let mut next: HashMap<PiState, Option<Back>> = HashMap::new();
        for st in states {
            for c in g.colors() {
                let cbit = if mode == Mode::Cddp { labeling.color_bit(c) } else { 0 };
                if st.color_labels & cbit != 0 {
                    continue;
                }
                for &(labels, _) in &ends[c.0] {
                    let direct = labels == 0;
                    if st.vertex_labels & labels != 0 || (direct && st.direct) {
                        continue;
                    }
                    let new = PiState {
                        vertex_labels: st.vertex_labels | labels,
                        color_labels: st.color_labels | cbit,
                        direct: st.direct || direct,
                    };
                    next.entry(new).or_insert(Some(Back { prev: st, color: c, labels }));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    TablePi { mode, layers, tables, ends }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DpOutcome {
    pub accepted: bool,
    /// Witness of an accepting run, empty otherwise.
    pub solution: PathSolution,
    pub labelings_tried: usize,
}

fn decide(
    inst: &ProblemInstance,
    l: usize,
    k: usize,
    strategy: &LabelingStrategy,
    acceptance: Acceptance,
    mode: Mode,
) -> Result<DpOutcome, SolveError> {
    inst.check()?;
    if l == 0 {
        return Err(SolveError::Precondition("length bound must be at least 1".into()));
    }
    let mut tried = 0;
    for labeling in generate_labelings(inst, l, k, strategy)? {
        tried += 1;
        if k == 0 && acceptance == Acceptance::AnySubset {
            return Ok(DpOutcome { accepted: true, solution: PathSolution::new(mode), labelings_tried: tried });
        }
        let pi = compute_table_pi(inst, &labeling, l, k, mode);
        if let Some(state) = pi.accepting_state(&labeling, k, acceptance) {
            let solution = pi.witness(inst, &labeling, k, state);
            debug_assert!(validate_solution(&inst.clone().with_length_bound(Some(l)), &solution).is_valid());
            return Ok(DpOutcome { accepted: true, solution, labelings_tried: tried });
        }
    }
    Ok(DpOutcome { accepted: false, solution: PathSolution::new(mode), labelings_tried: tried })
}

/// Are there `k` color-disjoint uni-color st-paths of length at most `l`?
/// Never accepts wrongly; may miss solutions under random labelings.
pub fn solve_l_cddp(
    inst: &ProblemInstance,
    l: usize,
    k: usize,
    strategy: &LabelingStrategy,
    acceptance: Acceptance,
) -> Result<DpOutcome, SolveError> {
    decide(inst, l, k, strategy, acceptance, Mode::Cddp)
}

/// As [`solve_l_cddp`] with colors allowed to repeat.
pub fn solve_l_cdp(
    inst: &ProblemInstance,
    l: usize,
    k: usize,
    strategy: &LabelingStrategy,
    acceptance: Acceptance,
) -> Result<DpOutcome, SolveError> {
    decide(inst, l, k, strategy, acceptance, Mode::Cdp)
}

/// Upper bound on any solution: each path leaves `s` through its own edge,
/// and in CDDP uses its own color.
fn path_count_bound(inst: &ProblemInstance, mode: Mode) -> usize {
    let deg = inst.graph.degree(inst.source);
    match mode {
        Mode::Cdp => deg,
        Mode::Cddp => deg.min(inst.graph.color_count()),
    }
}

/// Largest number of paths of length at most `l` found, in the instance's
/// mode. Exact under [`LabelingStrategy::Injective`]; a lower bound under
/// random labelings.
pub fn maximize(inst: &ProblemInstance, l: usize, strategy: &LabelingStrategy) -> Result<PathSolution, SolveError> {
    inst.check()?;
    if l == 0 {
        return Err(SolveError::Precondition("length bound must be at least 1".into()));
    }
    let mode = inst.mode;
    let bound = path_count_bound(inst, mode);
    let mut best = PathSolution::new(mode);
    match strategy {
        LabelingStrategy::Random { .. } => {
            for k in 1..=bound {
                if k <= best.value() {
                    continue;
                }
                let mut found = false;
                for labeling in generate_labelings(inst, l, k, strategy)? {
                    let pi = compute_table_pi(inst, &labeling, l, bound, mode);
                    let z = pi.max_paths();
                    if z >= k {
                        if z > best.value() {
                            let state = pi.layer_states(z)[0];
                            best = pi.witness(inst, &labeling, z, state);
                        }
                        found = true;
                        break;
                    }
                }
                if !found {
                    break;
                }
            }
        }
        LabelingStrategy::Witness(_) | LabelingStrategy::Injective => {
            let k = match strategy {
                LabelingStrategy::Witness(sol) => sol.value(),
                _ => bound,
            };
            for labeling in generate_labelings(inst, l, k, strategy)? {
                let pi = compute_table_pi(inst, &labeling, l, bound, mode);
                let z = pi.max_paths();
                if z > best.value() {
                    let state = pi.layer_states(z)[0];
                    best = pi.witness(inst, &labeling, z, state);
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig2;
    use crate::graph::EdgeColoredGraph;
    use crate::oracle::solve_exact;

    fn fig2_solution() -> PathSolution {
        PathSolution::from_paths(
            vec![UniColorPath::new(vec![0, 1, 3], Color(1)), UniColorPath::new(vec![0, 2, 3], Color(0))],
            Mode::Cddp,
        )
    }

    fn labeling(vertex: &[Option<u8>], colors: &[u8], h_v: usize, h_c: usize) -> Labeling {
        Labeling { vertex_labels: vertex.to_vec(), color_labels: colors.to_vec(), h_v, h_c }
    }

    #[test]
    fn s_table_basics() {
        let inst = fig2();
        let lab = labeling(&[None, Some(0), Some(1), None], &[0, 1], 2, 2);
        for c in inst.graph.colors() {
            let s = compute_table_s(&inst, &lab, c, 3);
            assert!(s.get(0, 0));
            assert!(!s.get(1, 0));
        }
        let red = compute_table_s(&inst, &lab, Color(0), 3);
        assert!(red.get(0b01, 1) && red.get(0b10, 2));
        let green = compute_table_s(&inst, &lab, Color(1), 3);
        assert!(green.get(0b01, 1) && !green.get(0b10, 2));
    }

    #[test]
    fn repeated_labels_block_extension() {
        // s-a-b-t all color c; a and b share a label.
        let mut g = EdgeColoredGraph::new(4, ["c"]).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 3)] {
            g.add_edge(u, v, [Color(0)]).unwrap();
        }
        let inst = ProblemInstance::new(g, 0, 3, Mode::Cddp);
        let same = labeling(&[None, Some(0), Some(0), None], &[0], 2, 1);
        let s = compute_table_s(&inst, &same, Color(0), 3);
        assert!(s.get(0b01, 1));
        assert!(!s.get(0b01, 2) && !s.get(0b11, 2));
        assert!(!solve_l_cddp(&inst, 3, 1, &LabelingStrategy::Witness(PathSolution::new(Mode::Cddp)), Acceptance::AnySubset).unwrap().accepted);
        let distinct = labeling(&[None, Some(0), Some(1), None], &[0], 2, 1);
        assert!(compute_table_s(&inst, &distinct, Color(0), 3).get(0b11, 2));
    }

    #[test]
    fn pi_on_fig2() {
        let inst = fig2();
        let lab = labeling(&[None, Some(0), Some(1), None], &[0, 1], 2, 2);
        let pi = compute_table_pi(&inst, &lab, 2, 3, Mode::Cddp);
        assert!(pi.get(0, 0, 0));
        assert!(pi.get(0b11, 0b11, 2));
        assert_eq!(pi.max_paths(), 2);
        assert!(!pi.get(0b11, 0b11, 3));
    }

    #[test]
    fn fig2_random_and_witness() {
        let inst = fig2();
        let random = LabelingStrategy::Random { trials: 200, seed: 1 };
        let out = solve_l_cddp(&inst, 2, 2, &random, Acceptance::AnySubset).unwrap();
        assert!(out.accepted);
        assert!(validate_solution(&inst, &out.solution).is_valid());
        let mut colors: Vec<Color> = out.solution.paths.iter().map(|p| p.color).collect();
        colors.sort();
        assert_eq!(colors, vec![Color(0), Color(1)]);

        let witness = LabelingStrategy::Witness(fig2_solution());
        let out = solve_l_cddp(&inst, 2, 2, &witness, Acceptance::FullLabelSet).unwrap();
        assert!(out.accepted);
        assert_eq!(out.labelings_tried, 1);
        assert!(!solve_l_cddp(&inst, 2, 3, &random, Acceptance::AnySubset).unwrap().accepted);
    }

    #[test]
    fn k_zero_accepts() {
        let out = solve_l_cddp(&fig2(), 1, 0, &LabelingStrategy::Injective, Acceptance::AnySubset).unwrap();
        assert!(out.accepted && out.solution.paths.is_empty());
    }

    #[test]
    fn cdp_variant() {
        let inst = fig2().with_mode(Mode::Cdp);
        let out = solve_l_cdp(&inst, 2, 2, &LabelingStrategy::Injective, Acceptance::AnySubset).unwrap();
        assert!(out.accepted);
        // q parallel paths of distinct colors.
        let mut g = EdgeColoredGraph::new(5, ["a", "b", "c"]).unwrap();
        for (i, v) in [1, 2, 3].into_iter().enumerate() {
            g.add_edge(0, v, [Color(i)]).unwrap();
            g.add_edge(v, 4, [Color(i)]).unwrap();
        }
        let par = ProblemInstance::new(g, 0, 4, Mode::Cdp);
        assert!(solve_l_cdp(&par, 2, 3, &LabelingStrategy::Random { trials: 300, seed: 5 }, Acceptance::AnySubset).unwrap().accepted);
    }

    #[test]
    fn direct_edge_counted_once() {
        let mut g = EdgeColoredGraph::new(2, ["a", "b"]).unwrap();
        g.add_edge(0, 1, [Color(0), Color(1)]).unwrap();
        let inst = ProblemInstance::new(g, 0, 1, Mode::Cddp);
        assert_eq!(maximize(&inst, 1, &LabelingStrategy::Injective).unwrap().value(), 1);
        assert!(!solve_l_cddp(&inst, 1, 2, &LabelingStrategy::Injective, Acceptance::AnySubset).unwrap().accepted);
    }

    #[test]
    fn injective_maximize_matches_oracle_on_fig2() {
        for mode in [Mode::Cdp, Mode::Cddp] {
            let inst = fig2().with_mode(mode);
            let exact = solve_exact(&inst).unwrap().value();
            let sol = maximize(&inst, 3, &LabelingStrategy::Injective).unwrap();
            assert_eq!(sol.value(), exact);
            assert!(validate_solution(&inst, &sol).is_valid());
        }
        assert_eq!(maximize(&fig2(), 1, &LabelingStrategy::Injective).unwrap().value(), 0);
    }

    #[test]
    fn random_stream_is_reproducible() {
        let inst = fig2();
        let strategy = LabelingStrategy::Random { trials: 5, seed: 9 };
        let a: Vec<Labeling> = generate_labelings(&inst, 3, 2, &strategy).unwrap().collect();
        let b: Vec<Labeling> = generate_labelings(&inst, 3, 2, &strategy).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert!(a.iter().all(|lab| lab.vertex_labels[0].is_none() && lab.vertex_labels[3].is_none()));
    }

    #[test]
    fn trial_bound() {
        assert_eq!(recommended_trials(1, 1, 0.5), (2f64.ln() * 1f64.exp()).ceil());
        assert!(recommended_trials(2, 3, 0.01) > 1000.0);
    }
}
