//! Algorithm dispatch shared by `solve` and `bench`.

use clap::ValueEnum;
use colored_paths::color_coding::{maximize, solve_l_cddp, solve_l_cdp, Acceptance, LabelingStrategy};
use colored_paths::oracle::solve_exact;
use colored_paths::poly::{per_color_flow_values, per_color_heuristic, solve_disjoint_paths_cdp, solve_single_color_flow, solve_tree_cddp};
use colored_paths::vc::{approx_cddp_vc, solve_cdp_vc, vc_decompose};
use colored_paths::xp::{find_deletion_set, solve_xp_cdp};
use colored_paths::{Color, Mode, PathSolution, ProblemInstance, SolveError};
use serde_json::{json, Map, Value};

use crate::record::Params;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Algo {
    /// Exhaustive path enumeration plus maximum independent set.
    Oracle,
    /// Max flow restricted to one color (`--color`, else the best one).
    Flow,
    /// Best single-color flow; a factor-q approximation.
    PerColor,
    /// Matching algorithm for MaxCDDP when G minus t is a tree.
    Tree,
    /// Greedy for MaxCDP when G - {s,t} is a union of disjoint paths.
    DisjointPaths,
    /// XP algorithm in the distance to disjoint paths (MaxCDP).
    Xp,
    /// Color-coding dynamic program for the length-bounded problems.
    ColorCoding,
    /// Exact MaxCDP parameterized by vertex cover.
    VcFpt,
    /// Half-approximation for MaxCDDP parameterized by vertex cover.
    VcApprox,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Oracle => "oracle",
            Algo::Flow => "flow",
            Algo::PerColor => "per-color",
            Algo::Tree => "tree",
            Algo::DisjointPaths => "disjoint-paths",
            Algo::Xp => "xp",
            Algo::ColorCoding => "color-coding",
            Algo::VcFpt => "vc-fpt",
            Algo::VcApprox => "vc-approx",
        }
    }

    /// Modes the algorithm answers for.
    pub fn supports(self, mode: Mode) -> bool {
        match self {
            Algo::DisjointPaths | Algo::Xp | Algo::VcFpt => mode == Mode::Cdp,
            Algo::VcApprox => mode == Mode::Cddp,
            _ => true,
        }
    }

    /// Returns an optimum whenever it succeeds.
    pub fn is_exact(self, mode: Mode, strategy: Strategy) -> bool {
        match self {
            Algo::Oracle | Algo::DisjointPaths | Algo::Xp | Algo::VcFpt => true,
            Algo::Tree => mode == Mode::Cddp,
            Algo::ColorCoding => strategy != Strategy::Random,
            Algo::Flow | Algo::PerColor | Algo::VcApprox => false,
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    #[default]
    Random,
    /// Labels from an oracle solution; for testing the DP.
    Witness,
    /// One label per vertex and color; exact but exponential in n.
    Injective,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub max_len: Option<usize>,
    pub target: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub strategy: Strategy,
    pub distance_max: usize,
    pub color: Option<String>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_len: None,
            target: None,
            trials: 200,
            seed: 0,
            strategy: Strategy::Random,
            distance_max: 3,
            color: None,
        }
    }
}

impl Options {
    /// The parameters worth recording for `algo`.
    pub fn params(&self, algo: Algo) -> Params {
        let mut p = Params { max_len: self.max_len, ..Params::default() };
        match algo {
            Algo::ColorCoding => {
                p.target = self.target;
                p.strategy = Some(self.strategy.to_possible_value().expect("named").get_name().to_string());
                if self.strategy == Strategy::Random {
                    p.seed = Some(self.seed);
                    p.trials = Some(self.trials);
                }
            }
            Algo::Xp => p.distance_max = Some(self.distance_max),
            _ => {}
        }
        p
    }
}

fn precondition(msg: impl Into<String>) -> SolveError {
    SolveError::Precondition(msg.into())
}

/// Runs `algo` on `inst` (mode and length bound already set).
pub fn run(inst: &ProblemInstance, algo: Algo, opts: &Options) -> Result<(PathSolution, Map<String, Value>), SolveError> {
    inst.check()?;
    let mode = inst.mode;
    if !algo.supports(mode) {
        return Err(precondition(format!("algorithm {} does not handle mode {mode}", algo.name())));
    }
    let mut stats = Map::new();
    let sol = match algo {
        Algo::Oracle => solve_exact(inst)?,
        Algo::Flow => {
            let color = match &opts.color {
                Some(name) => {
                    inst.graph.color_id(name).ok_or_else(|| precondition(format!("unknown color {name:?}")))?
                }
                None => {
                    let values = per_color_flow_values(inst)?;
                    let best = (0..values.len()).max_by_key(|&i| (values[i], std::cmp::Reverse(i))).unwrap_or(0);
                    Color(best)
                }
            };
            if color.0 >= inst.graph.color_count() {
                return Err(precondition("instance has no colors"));
            }
            stats.insert("color".into(), json!(inst.graph.color_name(color)));
            let mut sol = solve_single_color_flow(inst, color)?;
            if mode == Mode::Cddp {
                sol.paths.truncate(1);
            }
            sol.mode = mode;
            sol
        }
        Algo::PerColor => per_color_heuristic(inst)?,
        Algo::Tree => {
            let mut sol = solve_tree_cddp(inst)?;
            if mode == Mode::Cdp {
                stats.insert("note".into(), json!("tree solver maximizes color-disjoint paths"));
            }
            sol.mode = mode;
            sol
        }
        Algo::DisjointPaths => solve_disjoint_paths_cdp(inst)?,
        Algo::Xp => {
            let ds = find_deletion_set(inst, opts.distance_max).ok_or_else(|| {
                precondition(format!("distance to disjoint paths exceeds {}", opts.distance_max))
            })?;
            stats.insert("deletion_set".into(), json!(ds.vertices));
            solve_xp_cdp(inst, &ds)?
        }
        Algo::ColorCoding => color_coding(inst, opts, &mut stats)?,
        Algo::VcFpt => {
            let dec = vc_decompose(inst)?;
            stats.insert("greedy_prefix".into(), json!(dec.length3_paths.value()));
            stats.insert("cover".into(), json!(dec.cover));
            stats.insert("cover_size".into(), json!(dec.k));
            stats.insert("residual_length_bound".into(), json!(dec.length_bound()));
            stats.insert("residual_path_bound".into(), json!(dec.path_bound()));
            solve_cdp_vc(inst)?
        }
        Algo::VcApprox => {
            let (sol, cert) = approx_cddp_vc(inst)?;
            stats.insert("direct_edge".into(), json!(cert.direct.map(|c| inst.graph.color_name(c).to_string())));
            stats.insert("approx_a".into(), json!(cert.approx_a.value()));
            stats.insert("approx_h".into(), json!(cert.approx_h.value()));
            stats.insert("h_vertices".into(), json!(cert.h_vertices));
            stats.insert("h_cover_size".into(), json!(cert.h_cover));
            stats.insert("optimum_at_most".into(), json!(cert.upper_bound()));
            sol
        }
    };
    Ok((sol, stats))
}

fn color_coding(inst: &ProblemInstance, opts: &Options, stats: &mut Map<String, Value>) -> Result<PathSolution, SolveError> {
    let l = opts
        .max_len
        .or(inst.length_bound)
        .ok_or_else(|| precondition("color coding needs a length bound (--max-len or an `l` record)"))?;
    let bounded = inst.clone().with_length_bound(Some(l));
    let strategy = match opts.strategy {
        Strategy::Random => LabelingStrategy::Random { trials: opts.trials, seed: opts.seed },
        Strategy::Injective => LabelingStrategy::Injective,
        Strategy::Witness => LabelingStrategy::Witness(solve_exact(&bounded)?),
    };
    match opts.target {
        Some(k) => {
            let out = match inst.mode {
                Mode::Cddp => solve_l_cddp(&bounded, l, k, &strategy, Acceptance::AnySubset)?,
                Mode::Cdp => solve_l_cdp(&bounded, l, k, &strategy, Acceptance::AnySubset)?,
            };
            stats.insert("accepted".into(), json!(out.accepted));
            stats.insert("labelings_tried".into(), json!(out.labelings_tried));
            Ok(out.solution)
        }
        None => maximize(&bounded, l, &strategy),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use colored_paths::fixtures::fig2;
    use colored_paths::validate_solution;

    #[test]
    fn fig2_dispatch() {
        let inst = fig2();
        let opts = Options::default();
        assert_eq!(run(&inst, Algo::Oracle, &opts).unwrap().0.value(), 2);
        let (sol, stats) = run(&inst, Algo::VcApprox, &opts).unwrap();
        assert_eq!(sol.value(), 1);
        assert_eq!(stats["optimum_at_most"], json!(2));
        assert!(matches!(run(&inst, Algo::DisjointPaths, &opts), Err(SolveError::Precondition(_))));
        let cc = Options { max_len: Some(2), strategy: Strategy::Injective, ..Options::default() };
        let (sol, _) = run(&inst, Algo::ColorCoding, &cc).unwrap();
        assert_eq!(sol.value(), 2);
        assert!(validate_solution(&inst, &sol).is_valid());
    }

    #[test]
    fn flow_in_cddp_keeps_one_path() {
        let (sol, stats) = run(&fig2(), Algo::Flow, &Options::default()).unwrap();
        assert_eq!(sol.value(), 1);
        assert_eq!(stats["color"], json!("red"));
        let cdp = fig2().with_mode(Mode::Cdp);
        assert_eq!(run(&cdp, Algo::Flow, &Options::default()).unwrap().0.value(), 2);
    }

    #[test]
    fn names_are_kebab_case() {
        assert_eq!(Algo::DisjointPaths.name(), "disjoint-paths");
        assert_eq!(Algo::VcApprox.name(), "vc-approx");
    }
}
