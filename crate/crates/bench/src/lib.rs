//! Fixed benchmark inputs, shared by the criterion benches.

use invdom_core::generate::{clique_chain, corona};
use invdom_core::{parse_graph6, Graph};

/// Named graphs of growing difficulty for the exact solvers.
pub fn solver_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", parse_graph6(b"IheA@GUAo").expect("valid graph6")),
        ("cycle_20", Graph::cycle(20)),
        ("path_30", Graph::path(30)),
        ("corona_c8", corona(&Graph::cycle(8)).expect("16 vertices")),
        ("clique_chain_4x5", clique_chain(&[4, 4, 4, 4, 4]).expect("20 vertices")),
    ]
}

/// Five-cycle with two pendant leaves per cycle vertex: domination number 5
/// with an optimal dominating set that is not independent.
pub fn haired_c5() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i.min((i + 1) % 5), i.max((i + 1) % 5))).collect();
    for i in 0..5 {
        edges.push((i, 5 + 2 * i));
        edges.push((i, 6 + 2 * i));
    }
    Graph::from_edges(15, edges).expect("simple graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use invdom_core::solvers;

    #[test]
    fn haired_c5_needs_five() {
        assert_eq!(solvers::gamma(&haired_c5()).0, 5);
    }
}
