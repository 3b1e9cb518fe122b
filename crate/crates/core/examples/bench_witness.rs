//! Independently re-checks a feasible ball coloring straight off the graph,
//! without going through the constraint machinery.

use gridcrc_core::codes::parse_compact;
use gridcrc_core::feasibility::{build_lp_full, solve, Budget, SolveResult};
use gridcrc_core::lattice::ball_graph;

fn main() {
    let matrix = parse_compact("[0,8|1,0,7|4,0,4|7,0,1|8,0]").unwrap();
    let ball = ball_graph(4, 6);
    let problem = build_lp_full(&ball, &matrix).unwrap();
    let SolveResult::Feasible(assignment, _) = solve(&problem, &Budget::unlimited()) else {
        println!("not feasible");
        return;
    };
    let colors = problem.num_colors();
    let label = |v: u32| -> u32 {
        (0..colors)
            .find(|&c| assignment.values[problem.var(v, c) as usize])
            .expect("vertex colored")
    };
    // Exactly one color per vertex.
    for v in 0..ball.vertex_count() as u32 {
        let count = (0..colors)
            .filter(|&c| assignment.values[problem.var(v, c) as usize])
            .count();
        assert_eq!(count, 1, "vertex {v} has {count} colors");
    }
    assert_eq!(label(0), 0, "anchor");
    let mut violations = 0;
    for v in 0..ball.vertex_count() as u32 {
        let lv = label(v) as usize;
        let mut counts = vec![0u32; colors as usize];
        for &u in &ball.adjacency()[v as usize] {
            counts[label(u) as usize] += 1;
        }
        for j in 0..colors as usize {
            let expect = matrix.entry(lv, j);
            if ball.interior()[v as usize] {
                if counts[j] != expect {
                    violations += 1;
                    if violations < 5 {
                        println!(
                            "interior {:?} label {lv}: color {j} count {} != {expect}",
                            ball.vertices()[v as usize],
                            counts[j]
                        );
                    }
                }
            } else if counts[j] > expect {
                violations += 1;
                if violations < 5 {
                    println!(
                        "boundary {:?} label {lv}: color {j} count {} > {expect}",
                        ball.vertices()[v as usize],
                        counts[j]
                    );
                }
            }
        }
    }
    println!("violations: {violations}");
    // Label histogram for a look at the structure.
    let mut hist = vec![0u32; colors as usize];
    for v in 0..ball.vertex_count() as u32 {
        hist[label(v) as usize] += 1;
    }
    println!("label histogram: {hist:?}");
    // Are labels consistent with a distance partition from the label-0 set?
    let seeds: Vec<u32> =
        (0..ball.vertex_count() as u32).filter(|&v| label(v) == 0).collect();
    let bfs = gridcrc_core::lattice::distance_partition(ball.adjacency(), &seeds).unwrap();
    let mismatches = (0..ball.vertex_count())
        .filter(|&v| bfs[v] != label(v as u32))
        .count();
    println!("label-vs-ball-distance mismatches: {mismatches} (boundary effects expected)");
}
