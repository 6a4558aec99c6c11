//! Maximum Independent Set on cubic graphs into MaxCDDP.
//!
//! Each source vertex `v_i` becomes a gadget of four vertices
//! `v'_i, v'_{i,1}, v'_{i,2}, v'_{i,3}`. A path colored `c_i` runs
//! `s, v'_i, v'_{i,1}, v'_{i,2}, v'_{i,3}, t`, and for every edge
//! `{v_i, v_j}` where `v_j` is the p-th neighbor of `v_i` the path
//! `s, v'_{i,p}, t` is colored `c_{i,j}`. The color `c_{i,j}` is shared by
//! both endpoints of the edge. The optimum of the reduced instance is
//! `|E| + α(G)`.

use std::collections::{BTreeSet, HashMap};

use super::{digest, serialize_simple_graph, CubicGraph, ReductionCertificate};
use crate::error::ReductionError;
use crate::graph::{Color, EdgeColoredGraph, Vertex};
use crate::instance::{validate_solution, Mode, PathSolution, ProblemInstance, UniColorPath};

pub const SOURCE: Vertex = 0;
pub const TARGET: Vertex = 1;

/// Index arithmetic of the reduced graph.
#[derive(Clone, Debug)]
pub struct IscLayout {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    edge_colors: HashMap<(Vertex, Vertex), Color>,
}

impl IscLayout {
    pub fn new(g: &CubicGraph) -> Self {
        let edges = g.graph().edges();
        let n = g.vertex_count();
        let edge_colors = edges.iter().enumerate().map(|(k, &e)| (e, Color(n + k))).collect();
        IscLayout { vertex_count: n, edges, edge_colors }
    }

    /// `v'_i`.
    pub fn head(&self, i: Vertex) -> Vertex {
        2 + 4 * i
    }

    /// `v'_{i,p}` for `p` in `1..=3`.
    pub fn slot(&self, i: Vertex, p: usize) -> Vertex {
        2 + 4 * i + p
    }

    pub fn vertex_color(&self, i: Vertex) -> Color {
        Color(i)
    }

    pub fn edge_color(&self, i: Vertex, j: Vertex) -> Color {
        self.edge_colors[&(i.min(j), i.max(j))]
    }

    /// Source object behind a color: `Ok(i)` for `c_i`, `Err((i, j))` for `c_{i,j}`.
    pub fn color_source(&self, c: Color) -> Result<Vertex, (Vertex, Vertex)> {
        if c.0 < self.vertex_count {
            Ok(c.0)
        } else {
            Err(self.edges[c.0 - self.vertex_count])
        }
    }

    fn gadget_path(&self, i: Vertex) -> UniColorPath {
        let vertices = vec![SOURCE, self.head(i), self.slot(i, 1), self.slot(i, 2), self.slot(i, 3), TARGET];
        UniColorPath::new(vertices, self.vertex_color(i))
    }

    fn edge_path(&self, g: &CubicGraph, via: Vertex, other: Vertex) -> UniColorPath {
        let p = g.neighbor_position(via, other).expect("endpoints of an edge are neighbors");
        UniColorPath::new(vec![SOURCE, self.slot(via, p), TARGET], self.edge_color(via, other))
    }
}

pub fn reduce_isc_to_cddp(g: &CubicGraph) -> Result<(ProblemInstance, ReductionCertificate), ReductionError> {
    // Re-check in case the graph was assembled by hand.
    let g = CubicGraph::new(g.graph().clone())?;
    let layout = IscLayout::new(&g);
    let n = g.vertex_count();
    let mut colors: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    colors.extend(layout.edges.iter().map(|(i, j)| format!("c{i}_{j}")));
    let mut graph = EdgeColoredGraph::new(4 * n + 2, colors.clone())?;
    for i in 0..n {
        let path = layout.gadget_path(i);
        for w in path.vertices.windows(2) {
            graph.add_colors(w[0], w[1], [path.color])?;
        }
        for &j in g.graph().neighbors(i) {
            let path = layout.edge_path(&g, i, j);
            for w in path.vertices.windows(2) {
                graph.add_colors(w[0], w[1], [path.color])?;
            }
        }
    }

    let mut vertices = vec!["s".to_string(), "t".to_string()];
    for i in 0..n {
        vertices.push(format!("v'{i}"));
        for p in 1..=3 {
            vertices.push(format!("v'{i},{p}"));
        }
    }
    let color_sources = (0..n)
        .map(|i| format!("vertex {i}"))
        .chain(layout.edges.iter().map(|(i, j)| format!("edge {i}-{j}")))
        .collect();
    let certificate = ReductionCertificate {
        source_digest: digest(&serialize_simple_graph(g.graph())),
        vertices,
        colors: color_sources,
    };
    Ok((ProblemInstance::new(graph, SOURCE, TARGET, Mode::Cddp), certificate))
}

/// `|E| + |independent_set|` color-disjoint paths: the gadget path of every
/// chosen vertex, plus for each edge the short path through a gadget of an
/// endpoint outside the set (the smaller endpoint when both are free).
pub fn lift_is_to_paths(g: &CubicGraph, independent_set: &[Vertex]) -> Result<PathSolution, ReductionError> {
    let chosen: BTreeSet<Vertex> = independent_set.iter().copied().collect();
    for &v in &chosen {
        if v >= g.vertex_count() {
            return Err(ReductionError::ForeignSolution(format!("vertex {v} out of range")));
        }
    }
    for (u, v) in g.graph().edges() {
        if chosen.contains(&u) && chosen.contains(&v) {
            return Err(ReductionError::NotIndependent(u, v));
        }
    }
    let layout = IscLayout::new(g);
    let mut paths: Vec<UniColorPath> = chosen.iter().map(|&i| layout.gadget_path(i)).collect();
    for &(i, j) in &layout.edges {
        let (via, other) = if chosen.contains(&i) { (j, i) } else { (i, j) };
        paths.push(layout.edge_path(g, via, other));
    }
    Ok(PathSolution::from_paths(paths, Mode::Cddp))
}

/// Independent set of size at least `|sol| - |E|` recovered from a feasible
/// CDDP solution on the reduced instance.
///
/// Every missing edge color is first restored: through the gadget of an
/// endpoint whose vertex path is absent, or, when both endpoint paths are
/// present, by trading the smaller endpoint's vertex path for the edge path.
/// Neither step shrinks the solution.
pub fn project_paths_to_is(g: &CubicGraph, sol: &PathSolution) -> Result<Vec<Vertex>, ReductionError> {
    let (inst, _) = reduce_isc_to_cddp(g)?;
    let checked = PathSolution::from_paths(sol.paths.clone(), Mode::Cddp);
    let report = validate_solution(&inst, &checked);
    if !report.is_valid() {
        return Err(ReductionError::ForeignSolution(report.to_string()));
    }
    let layout = IscLayout::new(g);
    let need = layout.edges.len();
    if sol.value() < need {
        return Err(ReductionError::TooFewPaths { have: sol.value(), need });
    }
    let mut vertex_paths = BTreeSet::new();
    let mut edge_paths = BTreeSet::new();
    for p in &sol.paths {
        match layout.color_source(p.color) {
            Ok(i) => {
                vertex_paths.insert(i);
            }
            Err(e) => {
                edge_paths.insert(e);
            }
        }
    }
    for &(i, j) in &layout.edges {
        if edge_paths.contains(&(i, j)) {
            continue;
        }
        if vertex_paths.contains(&i) && vertex_paths.contains(&j) {
            vertex_paths.remove(&i);
        }
        edge_paths.insert((i, j));
    }
    let set: Vec<Vertex> = vertex_paths.into_iter().collect();
    debug_assert!(g.graph().is_independent(&set));
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::k4;
    use crate::oracle::solve_exact;

    #[test]
    fn k4_shape() {
        let (inst, cert) = reduce_isc_to_cddp(&k4()).unwrap();
        assert_eq!(inst.graph.vertex_count(), 18);
        assert_eq!(inst.graph.color_count(), 10);
        assert!(cert.is_bijective());
        assert_eq!(cert.vertices.len(), 18);
        // Without s and t the graph is four disjoint 4-vertex paths.
        let interior = inst.graph.remove_vertices(&[SOURCE, TARGET]).unwrap();
        assert_eq!(interior.edge_count(), 12);
        for i in 0..4 {
            let base = 2 + 4 * i;
            for k in 0..3 {
                assert!(interior.has_edge(base + k, base + k + 1));
            }
        }
    }

    #[test]
    fn gadget_colors_follow_neighbor_order() {
        let g = k4();
        let (inst, _) = reduce_isc_to_cddp(&g).unwrap();
        let layout = IscLayout::new(&g);
        // v_1 has neighbors 0 < 2 < 3.
        let names: Vec<Vec<&str>> = (0..4)
            .map(|k| {
                let v = layout.head(1) + k;
                inst.graph.edge_colors(SOURCE, v).unwrap().iter().map(|c| inst.graph.color_name(c)).collect()
            })
            .collect();
        assert_eq!(names, vec![vec!["c1"], vec!["c0_1"], vec!["c1_2"], vec!["c1_3"]]);
        // The last gadget edge to t carries both c_1 and the third edge color.
        let last: Vec<&str> = inst
            .graph
            .edge_colors(layout.slot(1, 3), TARGET)
            .unwrap()
            .iter()
            .map(|c| inst.graph.color_name(c))
            .collect();
        assert_eq!(last, vec!["c1", "c1_3"]);
    }

    #[test]
    fn k4_value_is_edges_plus_independence_number() {
        let (inst, _) = reduce_isc_to_cddp(&k4()).unwrap();
        assert_eq!(solve_exact(&inst).unwrap().value(), 7);
    }

    #[test]
    fn lift_and_project_round_trip() {
        let g = k4();
        let (inst, _) = reduce_isc_to_cddp(&g).unwrap();
        let sol = lift_is_to_paths(&g, &[1]).unwrap();
        assert_eq!(sol.value(), 7);
        assert!(validate_solution(&inst, &sol).is_valid());
        assert_eq!(project_paths_to_is(&g, &sol).unwrap(), vec![1]);

        let empty = lift_is_to_paths(&g, &[]).unwrap();
        assert_eq!(empty.value(), 6);
        assert!(validate_solution(&inst, &empty).is_valid());
        assert!(project_paths_to_is(&g, &empty).unwrap().is_empty());
    }

    #[test]
    fn lift_rejects_dependent_sets() {
        assert_eq!(lift_is_to_paths(&k4(), &[0, 1]), Err(ReductionError::NotIndependent(0, 1)));
    }

    #[test]
    fn project_requires_enough_paths() {
        let g = k4();
        let mut sol = lift_is_to_paths(&g, &[]).unwrap();
        sol.paths.truncate(5);
        assert_eq!(project_paths_to_is(&g, &sol), Err(ReductionError::TooFewPaths { have: 5, need: 6 }));
    }

    #[test]
    fn project_normalizes_vertex_paths() {
        let g = k4();
        let layout = IscLayout::new(&g);
        // Gadget paths for 0 and 1 block c0_1; keep the other five edge paths.
        let mut paths = vec![layout.gadget_path(0), layout.gadget_path(1)];
        for &(i, j) in &layout.edges {
            if (i, j) == (0, 1) {
                continue;
            }
            let via = if i == 0 || i == 1 { j } else { i };
            let other = if via == i { j } else { i };
            paths.push(layout.edge_path(&g, via, other));
        }
        let sol = PathSolution::from_paths(paths, Mode::Cddp);
        let (inst, _) = reduce_isc_to_cddp(&g).unwrap();
        assert!(validate_solution(&inst, &sol).is_valid(), "{}", validate_solution(&inst, &sol));
        assert_eq!(sol.value(), 7);
        let set = project_paths_to_is(&g, &sol).unwrap();
        assert_eq!(set.len(), 1);
        assert!(g.graph().is_independent(&set));
    }
}
