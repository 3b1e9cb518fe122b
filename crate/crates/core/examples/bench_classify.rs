//! Dry run of the dimension-three classification driver.

use std::time::Instant;

use gridcrc_core::classify::{classify_g3_1null, Bucket, CandidateVerdict};
use gridcrc_core::feasibility::Budget;

fn main() {
    let start = Instant::now();
    let budget = Budget { node_limit: Some(500_000_000), time_limit: None };
    let report = classify_g3_1null(6, &budget).expect("driver");
    println!("elapsed: {:?}", start.elapsed());
    println!("timeout: {}", report.has_timeout);
    for bucket in [Bucket::A1, Bucket::A2, Bucket::A3, Bucket::B] {
        println!("{bucket:?}: {:?}", report.bucket_matrices(bucket));
    }
    println!("\nfamilies:");
    for f in &report.families {
        println!("  {} <- {} (sample {})", f.pattern, f.g1_matrix, f.sample);
    }
    println!("\ntable:");
    for row in &report.table {
        println!("  {:55} {}", row.parameters, row.provenance);
    }
    let mut excluded = 0;
    let mut theorem = 0;
    let mut nodes = 0u64;
    for c in &report.candidates {
        match &c.verdict {
            CandidateVerdict::Excluded { .. } => excluded += 1,
            CandidateVerdict::ExcludedByTheorem { .. } => theorem += 1,
            _ => {}
        }
        nodes += c.runs.iter().map(|r| r.nodes).sum::<u64>();
    }
    println!(
        "\ncandidates: {} (excluded {excluded}, theorem-excluded {theorem}), total nodes {nodes}",
        report.candidates.len()
    );
}
