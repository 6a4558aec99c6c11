use colored_paths::color_coding::{
    compute_table_pi, compute_table_s, generate_labelings, maximize, solve_l_cddp, solve_l_cdp, Acceptance,
    Labeling, LabelingStrategy,
};
use colored_paths::oracle::{enumerate_unicolor_paths, solve_exact};
use colored_paths::reductions::{gen_random_instance, RandomInstanceParams};
use colored_paths::{validate_solution, Color, Mode, ProblemInstance, UniColorPath, Vertex};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn instance(n: usize, q: usize, mode: Mode, seed: u64) -> ProblemInstance {
    let params = RandomInstanceParams { vertices: n, colors: q, edge_prob: 0.4, mode, ..Default::default() };
    gen_random_instance(&params, seed).unwrap()
}

fn one_labeling(inst: &ProblemInstance, l: usize, k: usize, seed: u64) -> Labeling {
    generate_labelings(inst, l, k, &LabelingStrategy::Random { trials: 1, seed }).unwrap().next().unwrap()
}

fn label_bit(lab: &Labeling, v: Vertex) -> u64 {
    1 << lab.vertex_labels[v].unwrap()
}

/// Label sets of all s-to-u paths of color `c` with distinct labels, by DFS.
fn brute_s(inst: &ProblemInstance, lab: &Labeling, c: Color, max_internal: usize) -> Vec<BTreeSet<u64>> {
    fn go(
        inst: &ProblemInstance,
        lab: &Labeling,
        c: Color,
        left: usize,
        at: Vertex,
        mask: u64,
        out: &mut Vec<BTreeSet<u64>>,
    ) {
        if left == 0 {
            return;
        }
        for u in inst.graph.neighbors_with_color(at, c) {
            if inst.is_terminal(u) || mask & label_bit(lab, u) != 0 {
                continue;
            }
            let next = mask | label_bit(lab, u);
            out[u].insert(next);
            go(inst, lab, c, left - 1, u, next, out);
        }
    }
    let mut out = vec![BTreeSet::new(); inst.graph.vertex_count()];
    out[inst.source].insert(0);
    go(inst, lab, c, max_internal, inst.source, 0, &mut out);
    out
}

fn internal_mask(lab: &Labeling, p: &UniColorPath) -> Option<u64> {
    let mut mask = 0;
    for &v in p.internal() {
        let bit = label_bit(lab, v);
        if mask & bit != 0 {
            return None;
        }
        mask |= bit;
    }
    Some(mask)
}

/// Largest set of perfect paths with disjoint vertex labels (and color
/// labels in CDDP), the direct edge at most once.
fn brute_pi(inst: &ProblemInstance, lab: &Labeling, l: usize, mode: Mode) -> usize {
    let bounded = inst.clone().with_length_bound(Some(l));
    let paths: Vec<(u64, u64, bool)> = enumerate_unicolor_paths(&bounded, None)
        .unwrap()
        .iter()
        .filter_map(|p| {
            let cbit = if mode == Mode::Cddp { 1u64 << lab.color_labels[p.color.0] } else { 0 };
            internal_mask(lab, p).map(|m| (m, cbit, p.len() == 1))
        })
        .collect();
    fn go(paths: &[(u64, u64, bool)], from: usize, vm: u64, cm: u64, direct: bool) -> usize {
        let mut best = 0;
        for i in from..paths.len() {
            let (m, c, d) = paths[i];
            if vm & m == 0 && cm & c == 0 && !(d && direct) {
                best = best.max(1 + go(paths, i + 1, vm | m, cm | c, direct || d));
            }
        }
        best
    }
    go(&paths, 0, 0, 0, false)
}

#[test]
fn s_tables_match_path_enumeration() {
    for seed in 0..40 {
        let inst = instance(7 + (seed % 2) as usize, 2, Mode::Cdp, seed);
        let l = 2 + (seed % 4) as usize;
        let lab = one_labeling(&inst, l, 2, seed);
        for c in inst.graph.colors() {
            let table = compute_table_s(&inst, &lab, c, l - 1);
            let want = brute_s(&inst, &lab, c, l - 1);
            for u in 0..inst.graph.vertex_count() {
                if u == inst.target {
                    continue;
                }
                let got: BTreeSet<u64> = table.entries_at(u).into_iter().collect();
                assert_eq!(got, want[u], "seed {seed}, color {c:?}, vertex {u}");
            }
        }
    }
}

#[test]
fn pi_tables_match_path_set_enumeration() {
    for seed in 0..40 {
        let mode = if seed % 2 == 0 { Mode::Cdp } else { Mode::Cddp };
        let inst = instance(7, 3, mode, seed);
        let l = 2 + (seed % 3) as usize;
        let lab = one_labeling(&inst, l, 3, seed);
        let pi = compute_table_pi(&inst, &lab, l, inst.graph.vertex_count(), mode);
        assert_eq!(pi.max_paths(), brute_pi(&inst, &lab, l, mode), "seed {seed}");
    }
}

#[test]
fn injective_maximize_is_exact_under_length_bounds() {
    for seed in 0..30 {
        let mode = if seed % 2 == 0 { Mode::Cdp } else { Mode::Cddp };
        let l = 2 + (seed % 4) as usize;
        let inst = instance(9, 3, mode, 500 + seed).with_length_bound(Some(l));
        let sol = maximize(&inst, l, &LabelingStrategy::Injective).unwrap();
        assert!(validate_solution(&inst, &sol).is_valid());
        assert_eq!(sol.value(), solve_exact(&inst).unwrap().value(), "seed {seed}");
    }
}

#[test]
fn full_label_acceptance_agrees_with_any_subset_under_witness_labels() {
    for seed in 0..30 {
        let mode = if seed % 2 == 0 { Mode::Cdp } else { Mode::Cddp };
        let inst = instance(9, 3, mode, 900 + seed).with_length_bound(Some(4));
        let opt = solve_exact(&inst).unwrap();
        let k = opt.value();
        let strategy = LabelingStrategy::Witness(opt);
        for acceptance in [Acceptance::AnySubset, Acceptance::FullLabelSet] {
            let out = match mode {
                Mode::Cdp => solve_l_cdp(&inst, 4, k, &strategy, acceptance).unwrap(),
                Mode::Cddp => solve_l_cddp(&inst, 4, k, &strategy, acceptance).unwrap(),
            };
            assert!(out.accepted, "seed {seed}, {acceptance:?}, k {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn accepted_witnesses_validate(seed in 0u64..100_000, l in 1usize..6, k in 1usize..4, cddp in any::<bool>()) {
        let mode = if cddp { Mode::Cddp } else { Mode::Cdp };
        let inst = instance(10, 3, mode, seed);
        let strategy = LabelingStrategy::Random { trials: 5, seed };
        let out = if cddp {
            solve_l_cddp(&inst, l, k, &strategy, Acceptance::AnySubset).unwrap()
        } else {
            solve_l_cdp(&inst, l, k, &strategy, Acceptance::AnySubset).unwrap()
        };
        if out.accepted {
            let bounded = inst.with_length_bound(Some(l));
            prop_assert_eq!(out.solution.value(), k);
            prop_assert!(validate_solution(&bounded, &out.solution).is_valid());
        }
    }

    #[test]
    fn layers_are_monotone_in_k(seed in 0u64..100_000, l in 1usize..6) {
        let inst = instance(9, 3, Mode::Cddp, seed);
        let lab = one_labeling(&inst, l, 3, seed);
        let pi = compute_table_pi(&inst, &lab, l, 4, Mode::Cddp);
        let top = pi.max_paths();
        for z in 0..=top {
            prop_assert!(!pi.layer_states(z).is_empty());
        }
    }
}
