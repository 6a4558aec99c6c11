//! `cpaths`: solve, verify, reduce and benchmark disjoint uni-color path
//! instances.
//!
//! Exit codes: 0 success, 1 other failure (I/O, parse, invalid solution,
//! bench discrepancy), 2 precondition failure, 3 enumeration cap or size
//! limit exceeded.

mod bench;
mod record;
mod solve;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use colored_paths::ecg::{parse_instance, serialize_instance};
use colored_paths::reductions::{
    gen_disjoint_paths_instance, gen_near_disjoint_paths_instance, gen_random_cubic, gen_random_instance,
    gen_random_ts, gen_tree_instance, parse_simple_graph, project_paths_to_is, project_paths_to_ts,
    reduce_isc_to_cddp, reduce_ts_to_cdp, serialize_simple_graph, CubicGraph, RandomInstanceParams,
    ThresholdSetInstance,
};
use colored_paths::xp::min_deletion_set;
use colored_paths::{validate_solution, Mode, ProblemInstance, SolveError};
use serde_json::json;

use record::{instance_digest, RunRecord};
use solve::{Algo, Options, Strategy};

#[derive(Parser)]
#[command(name = "cpaths", version, about = "Disjoint uni-color st-paths in edge-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an ECG instance and print a JSON run record.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, default_value = "cdp")]
        mode: Mode,
        /// Length bound; overrides an `l` record in the file.
        #[arg(long)]
        max_len: Option<usize>,
        /// Color coding: decide whether this many paths exist.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "random")]
        strategy: Strategy,
        /// XP: largest deletion set to search for.
        #[arg(long, default_value_t = 3)]
        distance_max: usize,
        /// Flow: the color to use.
        #[arg(long)]
        color: Option<String>,
        /// Record wall time in the output.
        #[arg(long)]
        timing: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a run record against an instance; exit 1 when infeasible.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        /// Check under this mode instead of the record's.
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Build the MaxCDDP or MaxCDP instance of a reduction.
    Reduce {
        #[command(subcommand)]
        source: ReduceSource,
    },
    /// Map a solution of a reduced instance back to the source problem.
    Project {
        #[command(subcommand)]
        source: ProjectSource,
    },
    /// Write a seeded random instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Run every algorithm on the packaged corpus and compare with the oracle.
    Bench {
        /// Generated instances added to the three worked examples.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long)]
        timing: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Distance to disjoint paths: smallest deletion set leaving disjoint paths.
    Distance {
        instance: PathBuf,
        #[arg(long, default_value_t = 4)]
        distance_max: usize,
        /// Count s and t like other vertices instead of removing them for free.
        #[arg(long)]
        count_st: bool,
    },
}

#[derive(Subcommand)]
enum ReduceSource {
    /// Independent set on a cubic graph to MaxCDDP.
    Isc {
        graph: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Write the vertex and color naming tables here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Threshold Set to MaxCDP.
    Ts {
        instance: PathBuf,
        /// Add a singleton set for every element no set covers.
        #[arg(long)]
        cover_missing: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ProjectSource {
    Isc { graph: PathBuf, solution: PathBuf },
    Ts {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        cover_missing: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Random graph with `s = 0` and `t = n - 1`.
    Random {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 0.35)]
        p: f64,
        #[arg(long, default_value_t = 2)]
        colors_per_edge: usize,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Graph minus t is a tree.
    Tree {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
    },
    /// Interior is a union of disjoint paths.
    Disjoint {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
    },
    /// Disjoint paths plus `extra` arbitrary vertices.
    NearDisjoint {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        extra: usize,
    },
    /// Random cubic graph.
    Cubic {
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Random Threshold Set instance.
    Ts {
        #[arg(long, default_value_t = 6)]
        universe: usize,
        #[arg(long, default_value_t = 4)]
        sets: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_instance(path: &Path) -> Result<ProblemInstance> {
    parse_instance(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_cubic(path: &Path) -> Result<CubicGraph> {
    let g = parse_simple_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(CubicGraph::new(g)?)
}

fn load_ts(path: &Path, cover_missing: bool) -> Result<ThresholdSetInstance> {
    let ts = ThresholdSetInstance::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(if cover_missing { ts.with_coverage_sets() } else { ts })
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<SolveError>() {
                Some(SolveError::Precondition(_)) => ExitCode::from(2),
                Some(SolveError::Overflow { .. } | SolveError::SizeLimit { .. }) => ExitCode::from(3),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode> {
    match command {
        Command::Solve {
            instance,
            algo,
            mode,
            max_len,
            target,
            trials,
            seed,
            strategy,
            distance_max,
            color,
            timing,
            out,
        } => {
            let file_inst = load_instance(&instance)?;
            let mut inst = file_inst.clone().with_mode(mode);
            if max_len.is_some() && algo != Algo::ColorCoding {
                inst = inst.with_length_bound(max_len);
            }
            let opts = Options { max_len, target, trials, seed, strategy, distance_max, color };
            let start = Instant::now();
            let (sol, stats) = solve::run(&inst, algo, &opts)?;
            let elapsed = start.elapsed();
            let mut rec = RunRecord::new(&file_inst, algo.name(), opts.params(algo), &sol, stats);
            if timing {
                rec.wall_ms = Some(elapsed.as_secs_f64() * 1e3);
            }
            emit(&to_json(&rec)?, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { instance, solution, mode } => {
            let inst = load_instance(&instance)?;
            let rec = RunRecord::parse(&read(&solution)?)?;
            let mut sol = rec.solution(&inst)?;
            if let Some(m) = mode {
                sol.mode = m;
            }
            let mut problems = Vec::new();
            if rec.instance_digest != instance_digest(&inst) {
                problems.push("record was produced for a different instance".to_string());
            }
            if rec.value != sol.value() {
                problems.push(format!("value {} but {} paths", rec.value, sol.value()));
            }
            let report = validate_solution(&inst, &sol);
            problems.extend(report.violations.iter().map(ToString::to_string));
            if problems.is_empty() {
                println!("ok: {} feasible {} paths", sol.value(), sol.mode);
                Ok(ExitCode::SUCCESS)
            } else {
                for p in &problems {
                    println!("violation: {p}");
                }
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Reduce { source } => {
            let (inst, cert, out, cert_path) = match source {
                ReduceSource::Isc { graph, out, certificate } => {
                    let (inst, cert) = reduce_isc_to_cddp(&load_cubic(&graph)?)?;
                    (inst, cert, out, certificate)
                }
                ReduceSource::Ts { instance, cover_missing, out, certificate } => {
                    let (inst, cert) = reduce_ts_to_cdp(&load_ts(&instance, cover_missing)?)?;
                    (inst, cert, out, certificate)
                }
            };
            eprintln!("reduced instance is meant for --mode {}", inst.mode);
            emit(&serialize_instance(&inst), out.as_deref())?;
            if let Some(path) = cert_path {
                fs::write(&path, to_json(&cert)?).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Project { source } => {
            let doc = match source {
                ProjectSource::Isc { graph, solution } => {
                    let g = load_cubic(&graph)?;
                    let (inst, _) = reduce_isc_to_cddp(&g)?;
                    let sol = RunRecord::parse(&read(&solution)?)?.solution(&inst)?;
                    json!({ "independent_set": project_paths_to_is(&g, &sol)? })
                }
                ProjectSource::Ts { instance, solution, cover_missing } => {
                    let ts = load_ts(&instance, cover_missing)?;
                    let (inst, _) = reduce_ts_to_cdp(&ts)?;
                    let sol = RunRecord::parse(&read(&solution)?)?.solution(&inst)?;
                    json!({ "threshold_set": project_paths_to_ts(&ts, &sol)? })
                }
            };
            println!("{doc}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { kind, seed, out } => {
            let text = match kind {
                GenKind::Random { n, q, p, colors_per_edge, max_len } => {
                    let params = RandomInstanceParams {
                        vertices: n,
                        colors: q,
                        edge_prob: p,
                        colors_per_edge,
                        length_bound: max_len,
                        mode: Mode::Cdp,
                    };
                    serialize_instance(&gen_random_instance(&params, seed)?)
                }
                GenKind::Tree { n, q } => serialize_instance(&gen_tree_instance(n, q, seed)?),
                GenKind::Disjoint { n, q } => serialize_instance(&gen_disjoint_paths_instance(n, q, seed)?),
                GenKind::NearDisjoint { n, q, extra } => {
                    serialize_instance(&gen_near_disjoint_paths_instance(n, q, extra, seed)?)
                }
                GenKind::Cubic { n } => serialize_simple_graph(gen_random_cubic(n, seed)?.graph()),
                GenKind::Ts { universe, sets, max_weight } => gen_random_ts(universe, sets, max_weight, seed)?.to_text(),
            };
            emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { seeds, timing, out } => {
            let report = bench::bench(seeds, timing)?;
            for row in report.rows.iter().filter(|r| r.is_discrepancy()) {
                eprintln!(
                    "DISCREPANCY {} {} {}: {}",
                    row.instance,
                    row.mode,
                    row.algorithm,
                    row.detail.as_deref().unwrap_or("")
                );
            }
            let ok = report.rows.iter().filter(|r| r.status == "ok").count();
            eprintln!("{} rows, {ok} ok, {} discrepancies", report.rows.len(), report.discrepancies);
            emit(&to_json(&report)?, out.as_deref())?;
            Ok(if report.discrepancies == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Distance { instance, distance_max, count_st } => {
            let inst = load_instance(&instance)?;
            let g = inst.graph.to_simple();
            let (removed, candidates): (Vec<usize>, Vec<usize>) = if count_st {
                (Vec::new(), (0..g.vertex_count()).collect())
            } else {
                (vec![inst.source, inst.target], inst.interior().collect())
            };
            let Some(set) = min_deletion_set(&g, &removed, &candidates, distance_max) else {
                bail!(SolveError::Precondition(format!("distance to disjoint paths exceeds {distance_max}")));
            };
            let convention = if count_st { "s and t counted" } else { "s and t removed for free" };
            println!("{}", json!({ "distance": set.len(), "deletion_set": set, "convention": convention }));
            Ok(ExitCode::SUCCESS)
        }
    }
}
