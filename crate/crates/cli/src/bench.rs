//! Every algorithm against the oracle on a fixed corpus.

use anyhow::Result;
use colored_paths::fixtures::{fig2, fig3_threshold_set, k4};
use colored_paths::oracle::solve_exact_capped;
use colored_paths::reductions::{
    gen_disjoint_paths_instance, gen_near_disjoint_paths_instance, gen_random_instance, gen_tree_instance,
    reduce_isc_to_cddp, reduce_ts_to_cdp, RandomInstanceParams,
};
use colored_paths::{validate_solution, Mode, ProblemInstance, SolveError};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

use crate::record::{instance_digest, FORMAT_VERSION};
use crate::solve::{run, Algo, Options, Strategy};

/// Path cap for the oracle column; bigger instances get no oracle value.
const ORACLE_CAP: usize = 200_000;
/// Largest instance the injective color coding is run on.
const INJECTIVE_MAX_VERTICES: usize = 14;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub digest: String,
    pub mode: Mode,
    pub algorithm: String,
    pub value: Option<usize>,
    pub oracle: Option<usize>,
    /// `ok`, `skipped`, `overflow`, or a discrepancy: `invalid`, `mismatch`,
    /// `ratio`, `above-optimum`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl BenchRow {
    pub fn is_discrepancy(&self) -> bool {
        matches!(self.status.as_str(), "invalid" | "mismatch" | "ratio" | "above-optimum")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub format_version: u32,
    pub rows: Vec<BenchRow>,
    pub discrepancies: usize,
}

/// The three worked examples plus `seeds` generated instances cycling
/// through the random, tree, disjoint-path and near-disjoint generators.
pub fn corpus(seeds: u64) -> Result<Vec<(String, ProblemInstance)>> {
    let mut out = vec![
        ("fig2".to_string(), fig2()),
        ("fig3-reduced".to_string(), reduce_ts_to_cdp(&fig3_threshold_set())?.0),
        ("k4-reduced".to_string(), reduce_isc_to_cddp(&k4())?.0),
    ];
    for seed in 0..seeds {
        let (name, inst) = match seed % 4 {
            0 => {
                let params = RandomInstanceParams { vertices: 10, colors: 3, ..Default::default() };
                ("random", gen_random_instance(&params, seed)?)
            }
            1 => ("tree", gen_tree_instance(10, 3, seed)?),
            2 => ("disjoint", gen_disjoint_paths_instance(11, 3, seed)?),
            _ => ("near-disjoint", gen_near_disjoint_paths_instance(10, 3, 1, seed)?),
        };
        out.push((format!("{name}-{seed}"), inst));
    }
    Ok(out)
}

struct Task {
    name: String,
    inst: ProblemInstance,
    algo: Algo,
    strategy: Strategy,
}

pub fn bench(seeds: u64, timing: bool) -> Result<BenchReport> {
    let mut tasks = Vec::new();
    for (name, inst) in corpus(seeds)? {
        for mode in [Mode::Cdp, Mode::Cddp] {
            let inst = inst.clone().with_mode(mode);
            for algo in Algo::value_variants_sorted() {
                let strategies: &[Strategy] =
                    if algo == Algo::ColorCoding { &[Strategy::Injective, Strategy::Random] } else { &[Strategy::Random] };
                for &strategy in strategies {
                    tasks.push(Task { name: name.clone(), inst: inst.clone(), algo, strategy });
                }
            }
        }
    }
    let oracles: Vec<Option<usize>> = tasks
        .par_iter()
        .map(|t| solve_exact_capped(&t.inst, ORACLE_CAP).ok().map(|s| s.value()))
        .collect();
    let rows: Vec<BenchRow> = tasks.par_iter().zip(oracles).map(|(t, oracle)| bench_one(t, oracle, timing)).collect();
    let discrepancies = rows.iter().filter(|r| r.is_discrepancy()).count();
    Ok(BenchReport { format_version: FORMAT_VERSION, rows, discrepancies })
}

fn bench_one(task: &Task, oracle: Option<usize>, timing: bool) -> BenchRow {
    let inst = &task.inst;
    let n = inst.graph.vertex_count();
    let opts = Options {
        max_len: (task.algo == Algo::ColorCoding).then(|| inst.length_bound.unwrap_or(n - 1)),
        strategy: task.strategy,
        ..Options::default()
    };
    let algorithm = match task.algo {
        Algo::ColorCoding => format!("color-coding/{}", opts.params(Algo::ColorCoding).strategy.unwrap_or_default()),
        a => a.name().to_string(),
    };
    let mut row = BenchRow {
        instance: task.name.clone(),
        digest: instance_digest(inst),
        mode: inst.mode,
        algorithm,
        value: None,
        oracle,
        status: "ok".into(),
        detail: None,
        wall_ms: None,
    };
    if task.strategy == Strategy::Injective && n > INJECTIVE_MAX_VERTICES {
        row.status = "skipped".into();
        row.detail = Some(format!("injective labels on {n} vertices"));
        return row;
    }
    let start = Instant::now();
    let result = run(inst, task.algo, &opts);
    if timing {
        row.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let sol = match result {
        Ok((sol, _)) => sol,
        Err(SolveError::Precondition(msg)) => {
            row.status = "skipped".into();
            row.detail = Some(msg);
            return row;
        }
        Err(err) => {
            row.status = "overflow".into();
            row.detail = Some(err.to_string());
            return row;
        }
    };
    let value = sol.value();
    row.value = Some(value);
    let report = validate_solution(inst, &sol);
    if !report.is_valid() {
        row.status = "invalid".into();
        row.detail = Some(report.to_string());
        return row;
    }
    let Some(opt) = oracle else { return row };
    let q = inst.graph.color_count().max(1);
    let (status, detail) = if task.algo.is_exact(inst.mode, task.strategy) {
        (value != opt, format!("{value} != {opt}"))
    } else if task.algo == Algo::VcApprox {
        (2 * value < opt || value > opt, format!("{value} outside [{opt}/2, {opt}]"))
    } else if task.algo == Algo::PerColor {
        (value * q < opt || value > opt, format!("{value} outside [{opt}/{q}, {opt}]"))
    } else {
        (value > opt, format!("{value} > {opt}"))
    };
    if status {
        row.status = match task.algo {
            _ if task.algo.is_exact(inst.mode, task.strategy) => "mismatch",
            Algo::VcApprox | Algo::PerColor => "ratio",
            _ => "above-optimum",
        }
        .into();
        row.detail = Some(detail);
    }
    row
}

impl Algo {
    fn value_variants_sorted() -> Vec<Algo> {
        use clap::ValueEnum;
        let mut v = Algo::value_variants().to_vec();
        v.sort();
        v
    }
}
