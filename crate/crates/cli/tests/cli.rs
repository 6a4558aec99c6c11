use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use colored_paths::fixtures::{FIG2_ECG, FIG3_TS, K4_GRAPH};
use serde_json::Value;
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn cpaths(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpaths")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fixtures_match_library_constants() {
    assert_eq!(std::fs::read_to_string(fixture("fig2.ecg")).unwrap(), FIG2_ECG);
    assert_eq!(std::fs::read_to_string(fixture("fig3.ts")).unwrap(), FIG3_TS);
    assert_eq!(std::fs::read_to_string(fixture("k4.graph")).unwrap(), K4_GRAPH);
}

#[test]
fn fig2_oracle_and_approximation() {
    let fig2 = fixture("fig2.ecg");
    let rec = json_of(&cpaths(&["solve", "--algo", "oracle", "--mode", "cddp", path_str(&fig2)]));
    assert_eq!(rec["value"], 2);
    assert_eq!(rec["format_version"], 1);
    let rec = json_of(&cpaths(&["solve", "--algo", "vc-approx", "--mode", "cddp", path_str(&fig2)]));
    assert_eq!(rec["value"], 1);
    assert_eq!(rec["stats"]["approx_a"], 1);
    assert_eq!(rec["stats"]["optimum_at_most"], 2);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let random = dir.path().join("random.ecg");
    let out = cpaths(&["gen", "random", "--n", "10", "--seed", "3", "-o", path_str(&random)]);
    assert!(out.status.success());
    let tree = cpaths(&["solve", "--algo", "tree", "--mode", "cddp", path_str(&random)]);
    assert_eq!(tree.status.code(), Some(2));
    let fig2 = fixture("fig2.ecg");
    let dp = cpaths(&["solve", "--algo", "disjoint-paths", "--mode", "cddp", path_str(&fig2)]);
    assert_eq!(dp.status.code(), Some(2));
    let cc = cpaths(&["solve", "--algo", "color-coding", path_str(&fig2)]);
    assert_eq!(cc.status.code(), Some(2), "no length bound given");
    // Injective labels need one label per interior vertex, more than fit in a word.
    let big = dir.path().join("big.ecg");
    assert!(cpaths(&["gen", "random", "--n", "80", "--p", "0.05", "-o", path_str(&big)]).status.success());
    let cc = cpaths(&["solve", "--algo", "color-coding", "--strategy", "injective", "--max-len", "3", path_str(&big)]);
    assert_eq!(cc.status.code(), Some(3));
    let missing = cpaths(&["solve", "--algo", "oracle", "/nonexistent.ecg"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn every_output_verifies() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("near.ecg");
    let out = cpaths(&["gen", "near-disjoint", "--n", "10", "--extra", "1", "--seed", "5", "-o", path_str(&inst)]);
    assert!(out.status.success());
    let runs: &[&[&str]] = &[
        &["--algo", "oracle", "--mode", "cdp"],
        &["--algo", "oracle", "--mode", "cddp"],
        &["--algo", "flow", "--mode", "cdp"],
        &["--algo", "per-color", "--mode", "cddp"],
        &["--algo", "xp", "--mode", "cdp"],
        &["--algo", "color-coding", "--mode", "cddp", "--max-len", "4", "--seed", "7"],
        &["--algo", "color-coding", "--mode", "cdp", "--max-len", "4", "--strategy", "injective"],
        &["--algo", "vc-fpt", "--mode", "cdp"],
        &["--algo", "vc-approx", "--mode", "cddp"],
    ];
    for (i, args) in runs.iter().enumerate() {
        let sol = dir.path().join(format!("sol{i}.json"));
        let mut full = vec!["solve", path_str(&inst), "-o", path_str(&sol)];
        full.extend_from_slice(args);
        let out = cpaths(&full);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let verify = cpaths(&["verify", path_str(&inst), path_str(&sol)]);
        assert!(verify.status.success(), "{args:?}: {}", String::from_utf8_lossy(&verify.stdout));
    }
}

#[test]
fn mutated_witness_is_rejected() {
    let dir = TempDir::new().unwrap();
    let fig2 = fixture("fig2.ecg");
    let rec = json_of(&cpaths(&["solve", "--algo", "oracle", "--mode", "cdp", path_str(&fig2)]));
    let mut bad = rec.clone();
    bad["paths"][0]["color"] = Value::from("green");
    bad["paths"][0]["vertices"] = serde_json::json!([0, 2, 3]);
    let file = dir.path().join("bad.json");
    std::fs::write(&file, bad.to_string()).unwrap();
    let out = cpaths(&["verify", path_str(&fig2), path_str(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("lacks color green"));
    // Same paths are fine for CDP but not when colors must differ.
    let mut twin = rec;
    twin["paths"] = serde_json::json!([
        {"color": "red", "vertices": [0, 1, 3]},
        {"color": "red", "vertices": [0, 2, 3]},
    ]);
    std::fs::write(&file, twin.to_string()).unwrap();
    assert!(cpaths(&["verify", path_str(&fig2), path_str(&file)]).status.success());
    assert!(!cpaths(&["verify", "--mode", "cddp", path_str(&fig2), path_str(&file)]).status.success());
}

#[test]
fn threshold_set_reduce_solve_project() {
    let dir = TempDir::new().unwrap();
    let reduced = dir.path().join("fig3.ecg");
    let cert = dir.path().join("cert.json");
    let ts = fixture("fig3.ts");
    let out = cpaths(&["reduce", "ts", path_str(&ts), "-o", path_str(&reduced), "--certificate", path_str(&cert)]);
    assert!(out.status.success());
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(cert["vertices"].as_array().unwrap().len(), 11);
    let sol = dir.path().join("sol.json");
    let out = cpaths(&["solve", "--algo", "oracle", "--mode", "cdp", path_str(&reduced), "-o", path_str(&sol)]);
    assert!(out.status.success());
    let projected = json_of(&cpaths(&["project", "ts", path_str(&ts), path_str(&sol)]));
    assert_eq!(projected["threshold_set"].as_array().unwrap().len(), 2);
}

#[test]
fn k4_reduce_solve_project() {
    let dir = TempDir::new().unwrap();
    let reduced = dir.path().join("k4.ecg");
    let k4 = fixture("k4.graph");
    assert!(cpaths(&["reduce", "isc", path_str(&k4), "-o", path_str(&reduced)]).status.success());
    let sol = dir.path().join("sol.json");
    let out = cpaths(&["solve", "--algo", "oracle", "--mode", "cddp", path_str(&reduced), "-o", path_str(&sol)]);
    assert!(out.status.success());
    let rec: Value = serde_json::from_str(&std::fs::read_to_string(&sol).unwrap()).unwrap();
    assert_eq!(rec["value"], 7);
    let projected = json_of(&cpaths(&["project", "isc", path_str(&k4), path_str(&sol)]));
    assert_eq!(projected["independent_set"].as_array().unwrap().len(), 1);
}

#[test]
fn identical_arguments_identical_records() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("r.ecg");
    assert!(cpaths(&["gen", "random", "--n", "9", "--seed", "11", "-o", path_str(&inst)]).status.success());
    let args = ["solve", "--algo", "color-coding", "--mode", "cddp", "--max-len", "4", "--seed", "3", path_str(&inst)];
    assert_eq!(cpaths(&args).stdout, cpaths(&args).stdout);
    let gen = ["gen", "cubic", "--n", "10", "--seed", "2"];
    assert_eq!(cpaths(&gen).stdout, cpaths(&gen).stdout);
}

#[test]
fn distance_conventions() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("near.ecg");
    let out = cpaths(&["gen", "near-disjoint", "--n", "10", "--extra", "2", "--seed", "1", "-o", path_str(&inst)]);
    assert!(out.status.success());
    let free = json_of(&cpaths(&["distance", path_str(&inst)]));
    let counted = json_of(&cpaths(&["distance", "--count-st", path_str(&inst)]));
    let d = free["distance"].as_u64().unwrap();
    assert!(d <= 2);
    assert!(counted["distance"].as_u64().unwrap() <= d + 2);
    let fig2 = fixture("fig2.ecg");
    assert_eq!(json_of(&cpaths(&["distance", path_str(&fig2)]))["distance"], 0);
}

#[test]
fn bench_reports_no_discrepancies() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("bench.json");
    let out = cpaths(&["bench", "--out", path_str(&report)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(report["discrepancies"], 0);
    let rows = report["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["instance"] == "k4-reduced" && r["algorithm"] == "oracle" && r["value"] == 7));
}
