use colored_paths::ecg::{parse_instance, serialize_instance};
use colored_paths::oracle::{solve_exact, solve_is_bruteforce};
use colored_paths::reductions::{
    gen_random_cubic, gen_random_instance, gen_random_ts, lift_is_to_paths, lift_ts_solution, project_paths_to_is,
    project_paths_to_ts, reduce_isc_to_cddp, reduce_ts_to_cdp, RandomInstanceParams,
};
use colored_paths::{validate_instance, validate_solution, Mode};
use proptest::prelude::*;

#[test]
fn canonical_text_is_stable_on_random_instances() {
    for seed in 0..100 {
        let params = RandomInstanceParams {
            vertices: 4 + (seed % 9) as usize,
            colors: 1 + (seed % 4) as usize,
            length_bound: (seed % 3 == 0).then_some(3),
            ..Default::default()
        };
        let inst = gen_random_instance(&params, seed).unwrap();
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap().with_mode(inst.mode);
        assert_eq!(back, inst, "seed {seed}");
        assert_eq!(serialize_instance(&back), text);
    }
}

#[test]
fn removing_interior_vertices_keeps_instances_valid() {
    for seed in 0..50 {
        let params = RandomInstanceParams { vertices: 10, ..Default::default() };
        let inst = gen_random_instance(&params, seed).unwrap();
        let drop: Vec<usize> = inst.interior().filter(|v| (v + seed as usize).is_multiple_of(3)).collect();
        let smaller = inst.with_graph(inst.graph.remove_vertices(&drop).unwrap());
        assert!(validate_instance(&smaller).is_valid());
        assert!(drop.iter().all(|&v| smaller.graph.degree(v) == 0));
    }
}

#[test]
fn isc_values_on_every_size() {
    for n in [4, 6, 8, 10] {
        for seed in 0..3 {
            let g = gen_random_cubic(n, seed).unwrap();
            let (inst, cert) = reduce_isc_to_cddp(&g).unwrap();
            assert_eq!(inst.mode, Mode::Cddp);
            assert!(cert.is_bijective());
            let is = solve_is_bruteforce(g.graph()).unwrap();
            assert_eq!(solve_exact(&inst).unwrap().value(), g.graph().edge_count() + is.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isc_lift_project_round_trip(seed in 0u64..10_000, pick in proptest::collection::vec(any::<bool>(), 10)) {
        let g = gen_random_cubic(10, seed).unwrap();
        // Greedy independent set from the chosen vertices.
        let mut set: Vec<usize> = Vec::new();
        for (v, &p) in pick.iter().enumerate() {
            if p && set.iter().all(|&u| !g.graph().has_edge(u, v)) {
                set.push(v);
            }
        }
        let (inst, _) = reduce_isc_to_cddp(&g).unwrap();
        let sol = lift_is_to_paths(&g, &set).unwrap();
        prop_assert!(validate_solution(&inst, &sol).is_valid());
        prop_assert_eq!(sol.value(), g.graph().edge_count() + set.len());
        let back = project_paths_to_is(&g, &sol).unwrap();
        prop_assert_eq!(back, set);
    }

    #[test]
    fn ts_lift_project_round_trip(seed in 0u64..10_000, pick in proptest::collection::vec(any::<bool>(), 7)) {
        let ts = gen_random_ts(7, 4, 3, seed).unwrap().with_coverage_sets();
        let mut chosen: Vec<usize> = Vec::new();
        for (i, &p) in pick.iter().enumerate() {
            let mut next = chosen.clone();
            next.push(i);
            if p && ts.is_feasible(&next) {
                chosen = next;
            }
        }
        let (inst, _) = reduce_ts_to_cdp(&ts).unwrap();
        let sol = lift_ts_solution(&ts, &chosen).unwrap();
        prop_assert!(validate_solution(&inst, &sol).is_valid());
        prop_assert_eq!(project_paths_to_ts(&ts, &sol).unwrap(), chosen);
    }
}
