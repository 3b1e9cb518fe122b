//! The c2=4 leaf: exact-partial vs full-extension strength at radius 6.

use std::time::Instant;

use gridcrc_core::codes::parse_compact;
use gridcrc_core::feasibility::{build_lp_full, solve, Budget, SolveResult};
use gridcrc_core::lattice::ball_graph;

fn main() {
    let budget = Budget { node_limit: Some(500_000_000), time_limit: None };
    let matrix = parse_compact("[0,8|1,0,7|4,0,4|7,0,1|8,0]").unwrap();
    for radius in [8] {
        let ball = ball_graph(4, radius);
        let problem = build_lp_full(&ball, &matrix).unwrap();
        let start = Instant::now();
        let result = solve(&problem, &budget);
        let status = match &result {
            SolveResult::Feasible(..) => "feasible",
            SolveResult::Infeasible(_) => "infeasible",
            SolveResult::Timeout(_) => "timeout",
        };
        println!(
            "full extension radius={radius}: {status} nodes={} {:?}",
            result.stats().nodes,
            start.elapsed()
        );
    }
}
