//! Searches for a perfect coloring with a given tridiagonal matrix on small
//! tori; a hit lifts to a genuine periodic code with that matrix.

use std::time::Instant;

use gridcrc_core::codes::{parse_compact, verify_periodic, PeriodicCode};
use gridcrc_core::feasibility::{
    solve, Budget, FeasibilityProblem, LinearConstraint, Relation, SolveResult,
};
use gridcrc_core::lattice::{distance_partition, torus_graph};

fn main() {
    let matrix = parse_compact(
        &std::env::args().nth(1).unwrap_or_else(|| "[0,8|1,0,7|4,0,4|7,0,1|8,0]".into()),
    )
    .unwrap();
    let n = (matrix.valency() / 2) as usize;
    let rho = matrix.rho() as u32;
    let colors = rho + 1;
    for q in [4u32, 8] {
        let torus = torus_graph(n, q).unwrap();
        let v = torus.vertex_count() as u32;
        // Reorder vertices by graph distance from the origin so branching
        // grows outward like the ball problems.
        let labels = distance_partition(torus.adjacency(), &[0]).unwrap();
        let mut order: Vec<u32> = (0..v).collect();
        order.sort_by_key(|&vertex| (labels[vertex as usize], vertex));
        let mut position = vec![0u32; v as usize];
        for (pos, &vertex) in order.iter().enumerate() {
            position[vertex as usize] = pos as u32;
        }

        let var = |vertex: u32, c: u32| position[vertex as usize] * colors + c;
        let mut constraints = Vec::new();
        for vertex in 0..v {
            let terms = (0..colors).map(|c| (var(vertex, c), 1)).collect();
            constraints.push(LinearConstraint { terms, relation: Relation::Eq, bound: 1 });
        }
        for vertex in 0..v {
            for j in 0..colors {
                let mut terms: Vec<(u32, i32)> = torus.adjacency()[vertex as usize]
                    .iter()
                    .map(|&u| (var(u, j), 1))
                    .collect();
                for (i, value) in matrix.column(j as usize) {
                    terms.push((var(vertex, i as u32), -(value as i32)));
                }
                constraints.push(LinearConstraint { terms, relation: Relation::Eq, bound: 0 });
            }
        }
        let problem =
            FeasibilityProblem::coloring(v, colors, constraints, vec![(var(0, 0), true)]).unwrap();
        let start = Instant::now();
        let result = solve(&problem, &Budget { node_limit: Some(300_000_000), time_limit: None });
        match result {
            SolveResult::Feasible(assignment, stats) => {
                println!("torus q={q}: FEASIBLE ({} nodes, {:?})", stats.nodes, start.elapsed());
                let residues: Vec<Vec<i64>> = (0..v)
                    .filter(|&vertex| assignment.values[var(vertex, 0) as usize])
                    .map(|vertex| torus.vertices()[vertex as usize].coords().to_vec())
                    .collect();
                println!("  |C| = {} of {}", residues.len(), v);
                let code = PeriodicCode::new(n, vec![q; n], residues).unwrap();
                let verdict = verify_periodic(&code, Some(&matrix)).unwrap();
                println!(
                    "  verify_periodic: is_crc={} matrix={:?} matches={:?}",
                    verdict.is_crc, verdict.matrix, verdict.matches_expected
                );
                if verdict.matches_expected == Some(true) {
                    println!("  residues: {:?}", code.residues());
                    break;
                }
            }
            SolveResult::Infeasible(stats) => {
                println!("torus q={q}: infeasible ({} nodes, {:?})", stats.nodes, start.elapsed());
            }
            SolveResult::Timeout(stats) => {
                println!("torus q={q}: timeout ({} nodes, {:?})", stats.nodes, start.elapsed());
            }
        }
    }
}
