//! Threshold Set into MaxCDP.
//!
//! Element `i` gets a vertex `s_i` and color `c_i`; set `S_q` gets
//! `w(S_q)` interchangeable vertices `S_q^1..S_q^w`. A `c_i` path runs
//! `s, s_i`, then through one vertex of every set containing `i` in set
//! order, then `t`. Capacity `w(S_q)` of each set becomes vertex capacity.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{digest, ReductionCertificate};
use crate::error::{ParseError, ReductionError};
use crate::graph::{Color, EdgeColoredGraph, Vertex};
use crate::instance::{validate_solution, Mode, PathSolution, ProblemInstance, UniColorPath};

pub const SOURCE: Vertex = 0;
pub const TARGET: Vertex = 1;

/// Universe `0..universe`, an ordered family of sets and a weight per set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdSetInstance {
    universe: usize,
    sets: Vec<Vec<usize>>,
    weights: Vec<usize>,
}

impl ThresholdSetInstance {
    /// Sets are sorted and deduplicated. Weights must be positive.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, weights: Vec<usize>) -> Result<Self, ReductionError> {
        if let Some(q) = weights.iter().position(|&w| w == 0) {
            return Err(ReductionError::InvalidThresholdSet(format!("set {q} has weight 0")));
        }
        Self::new_allowing_zero(universe, sets, weights)
    }

    /// Like [`ThresholdSetInstance::new`] but accepts weight 0, which bans
    /// every element of the set.
    pub fn new_allowing_zero(
        universe: usize,
        sets: Vec<Vec<usize>>,
        weights: Vec<usize>,
    ) -> Result<Self, ReductionError> {
        if sets.len() != weights.len() {
            return Err(ReductionError::InvalidThresholdSet(format!(
                "{} sets but {} weights",
                sets.len(),
                weights.len()
            )));
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for (q, set) in sets.into_iter().enumerate() {
            let set: BTreeSet<usize> = set.into_iter().collect();
            if let Some(&e) = set.iter().find(|&&e| e >= universe) {
                return Err(ReductionError::InvalidThresholdSet(format!("set {q} has element {e} outside the universe")));
            }
            normalized.push(set.into_iter().collect());
        }
        Ok(ThresholdSetInstance { universe, sets: normalized, weights })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn is_feasible(&self, chosen: &[usize]) -> bool {
        self.check(chosen).is_ok()
    }

    fn check(&self, chosen: &[usize]) -> Result<BTreeSet<usize>, ReductionError> {
        let set: BTreeSet<usize> = chosen.iter().copied().collect();
        if set.len() != chosen.len() {
            return Err(ReductionError::InvalidThresholdSet("repeated element in solution".into()));
        }
        if let Some(&e) = set.iter().find(|&&e| e >= self.universe) {
            return Err(ReductionError::InvalidThresholdSet(format!("element {e} outside the universe")));
        }
        for (q, members) in self.sets.iter().enumerate() {
            let count = members.iter().filter(|e| set.contains(e)).count();
            if count > self.weights[q] {
                return Err(ReductionError::ThresholdViolated { set: q, count, weight: self.weights[q] });
            }
        }
        Ok(set)
    }

    /// Elements in no set.
    pub fn uncovered(&self) -> Vec<usize> {
        (0..self.universe).filter(|e| !self.sets.iter().any(|s| s.contains(e))).collect()
    }

    /// Appends a private set `{i}` of weight 1 for every uncovered element.
    /// Feasible solutions and the optimum are unchanged.
    pub fn with_coverage_sets(&self) -> Self {
        let mut out = self.clone();
        for e in self.uncovered() {
            out.sets.push(vec![e]);
            out.weights.push(1);
        }
        out
    }

    /// Text form: `u <size>` then one `set <weight> <elements...>` line per set.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut universe = None;
        let mut sets = Vec::new();
        let mut weights = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let nums = tokens[1..]
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| ParseError::new(line, format!("malformed number {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            match tokens[0] {
                "u" if nums.len() == 1 && universe.is_none() => universe = Some(nums[0]),
                "u" if nums.len() == 1 => return Err(ParseError::new(line, "duplicate `u` record")),
                "set" if !nums.is_empty() => {
                    if universe.is_none() {
                        return Err(ParseError::new(line, "`set` before `u`"));
                    }
                    weights.push(nums[0]);
                    sets.push(nums[1..].to_vec());
                }
                _ => return Err(ParseError::new(line, format!("malformed record {content:?}"))),
            }
        }
        let last = text.lines().count().max(1);
        let universe = universe.ok_or_else(|| ParseError::new(last, "missing `u` record"))?;
        ThresholdSetInstance::new(universe, sets, weights).map_err(|e| ParseError::new(last, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("u {}\n", self.universe);
        for (set, w) in self.sets.iter().zip(&self.weights) {
            let _ = write!(out, "set {w}");
            for e in set {
                let _ = write!(out, " {e}");
            }
            out.push('\n');
        }
        out
    }
}

/// Index arithmetic of the reduced graph: `s = 0`, `t = 1`, `s_i = 2 + i`,
/// then the set vertices grouped by set.
#[derive(Clone, Debug)]
pub struct ThresholdLayout {
    universe: usize,
    offsets: Vec<usize>,
    weights: Vec<usize>,
    /// Indices of the sets containing each element, ascending.
    chains: Vec<Vec<usize>>,
}

impl ThresholdLayout {
    pub fn new(ts: &ThresholdSetInstance) -> Self {
        let mut offsets = Vec::with_capacity(ts.sets.len());
        let mut acc = 0;
        for &w in &ts.weights {
            offsets.push(acc);
            acc += w;
        }
        let chains = (0..ts.universe)
            .map(|e| (0..ts.sets.len()).filter(|&q| ts.sets[q].contains(&e)).collect())
            .collect();
        ThresholdLayout { universe: ts.universe, offsets, weights: ts.weights.clone(), chains }
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.universe + self.weights.iter().sum::<usize>()
    }

    pub fn element_vertex(&self, i: usize) -> Vertex {
        2 + i
    }

    /// `S_q^j`, with `q` 0-based and `j` in `1..=w(S_q)`.
    pub fn set_vertex(&self, q: usize, j: usize) -> Vertex {
        debug_assert!(j >= 1 && j <= self.weights[q]);
        2 + self.universe + self.offsets[q] + (j - 1)
    }

    pub fn element_color(&self, i: usize) -> Color {
        Color(i)
    }

    fn slots(&self, q: usize) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.weights[q]).map(move |j| self.set_vertex(q, j))
    }
}

pub fn reduce_ts_to_cdp(ts: &ThresholdSetInstance) -> Result<(ProblemInstance, ReductionCertificate), ReductionError> {
    if let Some(&e) = ts.uncovered().first() {
        return Err(ReductionError::UncoveredElement(e));
    }
    let layout = ThresholdLayout::new(ts);
    let colors: Vec<String> = (0..ts.universe).map(|i| format!("c{i}")).collect();
    let mut graph = EdgeColoredGraph::new(layout.vertex_count(), colors)?;
    for i in 0..ts.universe {
        let c = layout.element_color(i);
        let si = layout.element_vertex(i);
        graph.add_colors(SOURCE, si, [c])?;
        let chain = &layout.chains[i];
        for &v in layout.slots(chain[0]).collect::<Vec<_>>().iter() {
            graph.add_colors(si, v, [c])?;
        }
        for pair in chain.windows(2) {
            for a in layout.slots(pair[0]) {
                for b in layout.slots(pair[1]) {
                    graph.add_colors(a, b, [c])?;
                }
            }
        }
        for v in layout.slots(*chain.last().expect("covered")) {
            graph.add_colors(v, TARGET, [c])?;
        }
    }

    let mut vertices = vec!["s".to_string(), "t".to_string()];
    vertices.extend((0..ts.universe).map(|i| format!("s{i}")));
    for (q, &w) in ts.weights.iter().enumerate() {
        vertices.extend((1..=w).map(|j| format!("S{q}^{j}")));
    }
    let certificate = ReductionCertificate {
        source_digest: digest(&ts.to_text()),
        vertices,
        colors: (0..ts.universe).map(|i| format!("element {i}")).collect(),
    };
    Ok((ProblemInstance::new(graph, SOURCE, TARGET, Mode::Cdp), certificate))
}

/// One path per chosen element. In every set on its chain the path uses
/// the slot given by the element's rank among the chosen members of that set.
pub fn lift_ts_solution(ts: &ThresholdSetInstance, chosen: &[usize]) -> Result<PathSolution, ReductionError> {
    let chosen = ts.check(chosen)?;
    if let Some(&e) = chosen.iter().find(|&&e| !ts.sets.iter().any(|s| s.contains(&e))) {
        return Err(ReductionError::UncoveredElement(e));
    }
    let layout = ThresholdLayout::new(ts);
    let paths = chosen
        .iter()
        .map(|&i| {
            let mut vertices = vec![SOURCE, layout.element_vertex(i)];
            for &q in &layout.chains[i] {
                let rank = ts.sets[q].iter().filter(|&&e| e <= i && chosen.contains(&e)).count();
                vertices.push(layout.set_vertex(q, rank));
            }
            vertices.push(TARGET);
            UniColorPath::new(vertices, layout.element_color(i))
        })
        .collect();
    Ok(PathSolution::from_paths(paths, Mode::Cdp))
}

/// Elements whose color certifies a path of a feasible solution.
pub fn project_paths_to_ts(ts: &ThresholdSetInstance, sol: &PathSolution) -> Result<Vec<usize>, ReductionError> {
    let (inst, _) = reduce_ts_to_cdp(ts)?;
    let checked = PathSolution::from_paths(sol.paths.clone(), Mode::Cdp);
    let report = validate_solution(&inst, &checked);
    if !report.is_valid() {
        return Err(ReductionError::ForeignSolution(report.to_string()));
    }
    let chosen: BTreeSet<usize> = sol.paths.iter().map(|p| p.color.0).collect();
    // Every c_i path passes s_i, so disjointness forces distinct colors.
    debug_assert_eq!(chosen.len(), sol.value());
    let chosen: Vec<usize> = chosen.into_iter().collect();
    debug_assert!(ts.is_feasible(&chosen));
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig3_threshold_set;
    use crate::oracle::{solve_exact, solve_thresholdset_bruteforce};

    #[test]
    fn fig3_shape() {
        let ts = fig3_threshold_set();
        let (inst, cert) = reduce_ts_to_cdp(&ts).unwrap();
        assert_eq!(inst.graph.vertex_count(), 11);
        assert_eq!(cert.vertices, ["s", "t", "s0", "s1", "s2", "s3", "S0^1", "S0^2", "S1^1", "S2^1", "S2^2"]);
        assert!(cert.is_bijective());
        // s_1 (element 0) reaches both slots of the first set.
        let c0 = Color(0);
        assert!(inst.graph.edge_has_color(2, 6, c0) && inst.graph.edge_has_color(2, 7, c0));
        assert!(inst.graph.edge_has_color(8, TARGET, c0));
        assert!(!inst.graph.has_edge(6, TARGET));
    }

    #[test]
    fn fig3_values_agree() {
        let ts = fig3_threshold_set();
        let (inst, _) = reduce_ts_to_cdp(&ts).unwrap();
        let best = solve_thresholdset_bruteforce(&ts).unwrap().len();
        assert_eq!(best, 2);
        assert_eq!(solve_exact(&inst).unwrap().value(), best);
    }

    #[test]
    fn lift_uses_rank_slots() {
        let ts = fig3_threshold_set();
        let sol = lift_ts_solution(&ts, &[0, 1]).unwrap();
        let (inst, _) = reduce_ts_to_cdp(&ts).unwrap();
        assert!(validate_solution(&inst, &sol).is_valid());
        assert_eq!(sol.paths[0].vertices, vec![0, 2, 6, 8, 1]);
        assert_eq!(sol.paths[1].vertices, vec![0, 3, 7, 9, 1]);
        assert_eq!(project_paths_to_ts(&ts, &sol).unwrap(), vec![0, 1]);
        assert_eq!(lift_ts_solution(&ts, &[]).unwrap().value(), 0);
    }

    #[test]
    fn lift_rejects_infeasible() {
        let ts = fig3_threshold_set();
        assert_eq!(
            lift_ts_solution(&ts, &[0, 1, 2]),
            Err(ReductionError::ThresholdViolated { set: 0, count: 3, weight: 2 })
        );
    }

    #[test]
    fn single_element() {
        let ts = ThresholdSetInstance::new(1, vec![vec![0]], vec![1]).unwrap();
        let (inst, _) = reduce_ts_to_cdp(&ts).unwrap();
        let sol = solve_exact(&inst).unwrap();
        assert_eq!(sol.value(), 1);
        assert_eq!(sol.paths[0].vertices, vec![0, 2, 3, 1]);
    }

    #[test]
    fn coverage_preprocessor() {
        let ts = ThresholdSetInstance::new(3, vec![vec![0]], vec![1]).unwrap();
        assert_eq!(reduce_ts_to_cdp(&ts).unwrap_err(), ReductionError::UncoveredElement(1));
        let covered = ts.with_coverage_sets();
        assert_eq!(covered.sets(), &[vec![0], vec![1], vec![2]]);
        let (inst, _) = reduce_ts_to_cdp(&covered).unwrap();
        assert_eq!(solve_exact(&inst).unwrap().value(), 3);
        assert_eq!(solve_thresholdset_bruteforce(&ts).unwrap().len(), 3);
    }

    #[test]
    fn text_round_trip() {
        let ts = fig3_threshold_set();
        let text = ts.to_text();
        assert_eq!(text, "u 4\nset 2 0 1 2\nset 1 0 3\nset 2 1 2 3\n");
        assert_eq!(ThresholdSetInstance::parse(&text).unwrap(), ts);
        assert!(ThresholdSetInstance::parse("u 2\nset 0 1\n").unwrap_err().message.contains("weight 0"));
        assert!(ThresholdSetInstance::parse("set 1 0\n").is_err());
        assert!(ThresholdSetInstance::parse("u 2\nset 1 5\n").is_err());
    }
}
