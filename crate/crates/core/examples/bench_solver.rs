//! Rough timings for the classification workloads. Not part of the test
//! suite; run with `cargo run --release -p gridcrc-core --example bench_solver`.

use std::time::Instant;

use gridcrc_core::codes::PartialMatrix;
use gridcrc_core::feasibility::{build_lp_partial, solve, Budget, LpMode, SolveResult};
use gridcrc_core::lattice::ball_graph;

fn show(tag: &str, result: &SolveResult, start: Instant) {
    let stats = result.stats();
    let status = match result {
        SolveResult::Feasible(..) => "feasible",
        SolveResult::Infeasible(_) => "infeasible",
        SolveResult::Timeout(_) => "timeout",
    };
    println!(
        "{tag:40} {status:10} nodes={:>12} props={:>14} {:?}",
        stats.nodes,
        stats.propagations,
        start.elapsed()
    );
}

fn main() {
    let budget = Budget { node_limit: Some(200_000_000), time_limit: None };

    let ball = ball_graph(3, 6);
    println!("ball(3,6): {} vertices", ball.vertex_count());

    // rho = 1 exact problems (criterion: feasible 1,2,3,6; infeasible 4,5).
    for c in 1..=6u32 {
        let block = PartialMatrix::new(6, vec![0], vec![], vec![c]).unwrap();
        let problem = build_lp_partial(&ball, &block, LpMode::Exact).unwrap();
        let start = Instant::now();
        let result = solve(&problem, &budget);
        show(&format!("rho1 c={c} exact"), &result, start);
    }

    // Theorem-3 instance: (0,6),(2,0),(0,3) at >= mode.
    for radius in [4, 5, 6] {
        let ball = ball_graph(3, radius);
        let block = PartialMatrix::new(6, vec![0, 0], vec![6], vec![2, 3]).unwrap();
        let problem = build_lp_partial(&ball, &block, LpMode::AtLeast).unwrap();
        let start = Instant::now();
        let result = solve(&problem, &budget);
        show(&format!("c1=2 c2=3 ge radius={radius}"), &result, start);
    }

    // A sample of rho=2 at-least instances at radius 6.
    for (a1, c1, c2) in [(0u32, 1u32, 3u32), (0, 1, 4), (0, 2, 2), (1, 2, 2), (0, 1, 5), (2, 1, 2)] {
        let block = PartialMatrix::new(6, vec![0, a1], vec![6], vec![c1, c2]).unwrap();
        let problem = build_lp_partial(&ball, &block, LpMode::AtLeast).unwrap();
        let start = Instant::now();
        let result = solve(&problem, &budget);
        show(&format!("a1={a1} c1={c1} c2={c2} ge r=6"), &result, start);
    }
}
