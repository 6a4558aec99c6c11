use colored_paths::oracle::solve_exact;
use colored_paths::poly::{
    per_color_flow_values, solve_disjoint_paths_cdp, solve_single_color_flow, solve_tree_cddp, TreeMatchingGraph,
};
use colored_paths::matching::maximum_bipartite_matching;
use colored_paths::reductions::{
    gen_disjoint_paths_instance, gen_near_disjoint_paths_instance, gen_random_instance, gen_tree_instance,
    RandomInstanceParams,
};
use colored_paths::xp::{find_deletion_set, solve_xp_cdp};
use colored_paths::{validate_solution, Color, Mode};

#[test]
fn tree_solver_matches_oracle() {
    for seed in 0..40 {
        let inst = gen_tree_instance(12, 4, seed).unwrap();
        let sol = solve_tree_cddp(&inst).unwrap();
        assert!(validate_solution(&inst, &sol).is_valid());
        assert_eq!(sol.value(), solve_exact(&inst).unwrap().value(), "seed {seed}");
        let tm = TreeMatchingGraph::build(&inst).unwrap();
        assert_eq!(maximum_bipartite_matching(&tm.graph).len(), sol.value());
    }
}

#[test]
fn disjoint_paths_solver_matches_oracle() {
    for seed in 0..60 {
        let inst = gen_disjoint_paths_instance(13, 3, seed).unwrap();
        let sol = solve_disjoint_paths_cdp(&inst).unwrap();
        assert!(validate_solution(&inst, &sol).is_valid());
        assert_eq!(sol.value(), solve_exact(&inst).unwrap().value(), "seed {seed}");
    }
}

#[test]
fn xp_solver_matches_oracle() {
    for seed in 0..30 {
        let extra = 1 + (seed as usize % 2);
        let inst = gen_near_disjoint_paths_instance(11, 3, extra, seed).unwrap();
        let ds = find_deletion_set(&inst, 2).unwrap();
        let sol = solve_xp_cdp(&inst, &ds).unwrap();
        assert!(validate_solution(&inst, &sol).is_valid(), "seed {seed}");
        assert_eq!(sol.value(), solve_exact(&inst).unwrap().value(), "seed {seed}");
    }
}

#[test]
fn single_color_flow_matches_oracle_on_one_color_graphs() {
    for seed in 0..40 {
        let params = RandomInstanceParams { vertices: 10, colors: 1, edge_prob: 0.35, ..Default::default() };
        let inst = gen_random_instance(&params, seed).unwrap();
        let sol = solve_single_color_flow(&inst, Color(0)).unwrap();
        assert!(validate_solution(&inst, &sol).is_valid());
        assert_eq!(sol.value(), solve_exact(&inst).unwrap().value(), "seed {seed}");
    }
}

#[test]
fn flow_sum_bounds_cdp() {
    for seed in 0..30 {
        let params = RandomInstanceParams { vertices: 10, colors: 3, ..Default::default() };
        let inst = gen_random_instance(&params, seed).unwrap();
        let total: usize = per_color_flow_values(&inst).unwrap().iter().sum();
        let cdp = solve_exact(&inst).unwrap().value();
        let cddp = solve_exact(&inst.clone().with_mode(Mode::Cddp)).unwrap().value();
        assert!(cddp <= cdp && cdp <= total, "seed {seed}");
    }
}
