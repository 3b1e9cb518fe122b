//! Dry run of the dimension-four two-null classification.

use std::time::Instant;

use gridcrc_core::classify::classify_g4_2null;
use gridcrc_core::feasibility::Budget;

fn main() {
    let start = Instant::now();
    let budget = Budget { node_limit: Some(500_000_000), time_limit: None };
    let report = classify_g4_2null(&[4], 6, &budget).expect("driver");
    println!("elapsed: {:?}", start.elapsed());
    println!("timeout: {}", report.has_timeout);
    for c in &report.candidates {
        let nodes: u64 = c.runs.iter().map(|r| r.nodes).sum();
        println!(
            "{:20} -> {:?} ({} runs, {} nodes)",
            c.candidate.compact(),
            c.verdict,
            c.runs.len(),
            nodes
        );
        for r in c.runs.iter() {
            println!(
                "    {} mode={} rho={} radius={} {:?} seeded={} nodes={}",
                r.candidate, r.mode, r.rho, r.radius, r.status, r.seeded, r.nodes
            );
        }
    }
    println!("\ntable:");
    for row in &report.table {
        println!("  {:45} {}", row.parameters, row.provenance);
    }
}
