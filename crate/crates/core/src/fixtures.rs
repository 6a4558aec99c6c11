//! Small worked instances used by tests, the CLI and the bench corpus.

use crate::ecg::parse_instance;
use crate::instance::{Mode, ProblemInstance};
use crate::reductions::{parse_simple_graph, CubicGraph, ThresholdSetInstance};

/// Two colors between `s = 0` and `t = 3` through `v = 1` (red and green)
/// and `u = 2` (red only). Both problems have optimum 2, but a greedy that
/// takes red through `v` first ends with 1 color-disjoint path.
pub const FIG2_ECG: &str = "\
# v carries red and green, u carries red only
n 4
colors red green
s 0
t 3
e 0 1 red,green
e 0 2 red
e 1 3 red,green
e 2 3 red
";

/// Universe {0,1,2,3}, sets {0,1,2} w=2, {0,3} w=1, {1,2,3} w=2.
pub const FIG3_TS: &str = "\
u 4
set 2 0 1 2
set 1 0 3
set 2 1 2 3
";

pub const K4_GRAPH: &str = "\
n 4
e 0 1
e 0 2
e 0 3
e 1 2
e 1 3
e 2 3
";

/// [`FIG2_ECG`] in CDDP mode.
pub fn fig2() -> ProblemInstance {
    parse_instance(FIG2_ECG).expect("fixture parses").with_mode(Mode::Cddp)
}

pub fn fig3_threshold_set() -> ThresholdSetInstance {
    ThresholdSetInstance::parse(FIG3_TS).expect("fixture parses")
}

pub fn k4() -> CubicGraph {
    CubicGraph::new(parse_simple_graph(K4_GRAPH).expect("fixture parses")).expect("K4 is cubic")
}
