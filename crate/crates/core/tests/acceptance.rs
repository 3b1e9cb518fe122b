//! Acceptance suite: one test per release criterion, each printing a
//! `criterion N: PASS/FAIL` line. Run with
//! `cargo test -p gridcrc-core --test acceptance -- --nocapture`.
//!
//! Criterion 6 is split: the c2 = 4 exclusion is asserted as stated and is
//! expected to fail — the feasibility problems it would need to be
//! infeasible are genuinely satisfiable at every radius up to 8, with
//! machine-verified witnesses. See the test message for details.

use std::time::Instant;

use gridcrc_core::classify::{
    canonicalize, classify_g3_1null, classify_g4_2null, classify_rho1, Bucket, CandidateVerdict,
    ClassificationReport, RunStatus,
};
use gridcrc_core::codes::{grid_labels, parse_compact, verify_periodic, ParamMatrix, PartialMatrix};
use gridcrc_core::constructions::{self, catalog};
use gridcrc_core::feasibility::{
    assignment_from_labels, brute_force, build_lp_full, build_lp_partial, solve, verify_assignment,
    Assignment, Budget, FeasibilityProblem, LinearConstraint, LpMode, Relation, SolveResult,
};
use gridcrc_core::lattice::{ball_graph, gray_word, hamming_graph, torus_graph};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn budget() -> Budget {
    // Generous node caps; the criteria demand completed searches, and every
    // exclusion below finishes well inside these bounds.
    Budget { node_limit: Some(1_000_000_000), time_limit: None }
}

fn pm(text: &str) -> ParamMatrix {
    parse_compact(text).unwrap()
}

/// Criterion 1: every shipped generator verifies to its claimed matrix,
/// exactly, for n = 1..4, within ten seconds.
#[test]
fn criterion_1_construction_suite() {
    let start = Instant::now();
    for n in 1..=4 {
        for spec in catalog(n).unwrap() {
            let verdict = verify_periodic(&spec.code, Some(&spec.claimed)).unwrap();
            assert!(
                verdict.is_crc && verdict.matches_expected == Some(true),
                "catalog {} (n={n}) verified to {:?}, claimed {}",
                spec.id,
                verdict.matrix,
                spec.claimed
            );
        }
        // The named spot checks.
        let gw = constructions::golomb_welch_perfect(n);
        let claimed = constructions::perfect_matrix(n);
        assert_eq!(
            verify_periodic(&gw, Some(&claimed)).unwrap().matches_expected,
            Some(true)
        );
    }
    let halved2 = verify_periodic(
        &constructions::halved_perfect(2),
        Some(&pm("[0,4|1,0,3|3,0,1|4,0]")),
    )
    .unwrap();
    assert_eq!(halved2.matches_expected, Some(true));
    let distance3 = verify_periodic(
        &constructions::distance_code(3),
        Some(&pm("[0,6|1,0,5|2,0,4|3,0,3|4,0,2|5,0,1|6,0]")),
    )
    .unwrap();
    assert_eq!(distance3.matches_expected, Some(true));
    for t in [1u32, 2] {
        let union = constructions::diameter_union(3, t).unwrap();
        let claimed = pm(&format!("[0,6|{t},0,{}|6,0]", 6 - t));
        assert_eq!(verify_periodic(&union, Some(&claimed)).unwrap().matches_expected, Some(true));
    }
    let multiplied = constructions::multiply(
        &constructions::from_quotient(1, 3, [vec![0]]).unwrap(),
        3,
    );
    assert_eq!(
        verify_periodic(&multiplied, Some(&pm("[0,6|3,3]"))).unwrap().matches_expected,
        Some(true)
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "construction suite took {elapsed:?}");
    println!("criterion 1: PASS - construction suite verified exactly in {elapsed:?}");
}

/// Criterion 2: the Gray mapping is an adjacency bijection between the
/// 4-torus and the binary Hamming graph of doubled length, exhaustively for
/// n = 1..3, within one second.
#[test]
fn criterion_2_gray_isomorphism() {
    let start = Instant::now();
    for n in 1..=3usize {
        let torus = torus_graph(n, 4).unwrap();
        let hamming = hamming_graph(2 * n, 2).unwrap();
        assert_eq!(torus.vertex_count(), hamming.vertex_count());
        let image: Vec<u32> = torus
            .vertices()
            .iter()
            .map(|w| hamming.index_of(gray_word(w.coords()).unwrap().coords()))
            .collect();
        // Injective, hence bijective.
        let mut seen = vec![false; hamming.vertex_count()];
        for &img in &image {
            assert!(!seen[img as usize], "gray image collision");
            seen[img as usize] = true;
        }
        for x in 0..torus.vertex_count() as u32 {
            for y in 0..torus.vertex_count() as u32 {
                if x == y {
                    continue;
                }
                let adjacent = torus.adjacency()[x as usize].contains(&y);
                let image_adjacent =
                    hamming.adjacency()[image[x as usize] as usize].contains(&image[y as usize]);
                assert_eq!(adjacent, image_adjacent, "n={n}, pair ({x},{y})");
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "gray check took {elapsed:?}");
    println!("criterion 2: PASS - torus(n,4) = H(2n,2) exhaustively for n = 1..3 in {elapsed:?}");
}

fn rho1_statuses(report: &ClassificationReport) -> Vec<(u32, bool)> {
    report
        .candidates
        .iter()
        .filter(|c| c.rho == 1)
        .map(|c| {
            let c1 = c.candidate.c()[0];
            let feasible = matches!(
                c.verdict,
                CandidateVerdict::Realized { .. } | CandidateVerdict::FeasibleNotExcluded { .. }
            );
            if !feasible {
                assert!(
                    matches!(c.verdict, CandidateVerdict::Excluded { .. }),
                    "rho=1 c={c1}: unexpected verdict {:?}",
                    c.verdict
                );
                // Completed search, never a timeout.
                assert!(c.runs.iter().all(|r| r.status == RunStatus::Infeasible));
            }
            (c1, feasible)
        })
        .collect()
}

/// Criterion 3: at radius six the exactly-one-ball problem is feasible for
/// c1 in {1,2,3,6} and infeasible (complete search) for c1 in {4,5}.
#[test]
fn criterion_3_rho1_classification() {
    let start = Instant::now();
    let report = classify_rho1(3, 6, &budget()).unwrap();
    assert!(!report.has_timeout, "criterion demands completed searches");
    let statuses = rho1_statuses(&report);
    let expected =
        vec![(1, true), (2, true), (3, true), (4, false), (5, false), (6, true)];
    assert_eq!(statuses, expected, "rho=1 feasibility pattern");

    // Independent oracle in one dimension: enumerate all two-colorings of
    // ball(1,6) directly and compare with the driver.
    let ball = ball_graph(1, 6);
    let v = ball.vertex_count();
    let anchor = ball.index_of(&[0]).unwrap() as usize;
    let mut oracle_feasible = Vec::new();
    for c1 in 1..=2u32 {
        let matrix = pm(&format!("[0,2|{c1},{}]", 2 - c1));
        let mut found = false;
        'masks: for mask in 0..(1u64 << v) {
            if mask >> anchor & 1 == 0 {
                continue;
            }
            let in_code = |u: u32| mask >> u & 1 == 1;
            for x in 0..v as u32 {
                let label = usize::from(!in_code(x));
                let count =
                    ball.adjacency()[x as usize].iter().filter(|&&u| in_code(u)).count() as u32;
                let expected = matrix.entry(label, 0);
                let ok = if ball.interior()[x as usize] {
                    count == expected
                } else {
                    count <= expected
                };
                if !ok {
                    continue 'masks;
                }
                // Also the second column, implied by the first plus degree.
                let count1 = ball.degree(x as u32) as u32 - count;
                let expected1 = matrix.entry(label, 1);
                let ok1 = if ball.interior()[x as usize] {
                    count1 == expected1
                } else {
                    count1 <= expected1
                };
                if !ok1 {
                    continue 'masks;
                }
            }
            found = true;
            break;
        }
        oracle_feasible.push((c1, found));
    }
    let g1 = classify_rho1(1, 6, &budget()).unwrap();
    assert_eq!(rho1_statuses(&g1), oracle_feasible, "one-dimensional oracle");
    println!(
        "criterion 3: PASS - feasible exactly for c1 in {{1,2,3,6}} at radius 6 ({:?})",
        start.elapsed()
    );
}

/// Criterion 4: the (c1, c2) = (2, 3) prefix admits no covering radius at
/// all - the at-least problem is infeasible by complete search.
#[test]
fn criterion_4_two_null_exclusion() {
    let start = Instant::now();
    let ball = ball_graph(3, 6);
    let block = PartialMatrix::new(6, vec![0, 0], vec![6], vec![2, 3]).unwrap();
    let problem = build_lp_partial(&ball, &block, LpMode::AtLeast).unwrap();
    let result = solve(&problem, &budget());
    assert!(
        result.is_infeasible(),
        "expected complete infeasibility, got {result:?}"
    );
    println!(
        "criterion 4: PASS - (0,6),(2,0),(0,3) at-least problem infeasible at radius 6 \
         ({} nodes, {:?})",
        result.stats().nodes,
        start.elapsed()
    );
}

/// Criterion 5: the full dimension-three decision tree lands exactly in the
/// published buckets and parameter table.
#[test]
fn criterion_5_g3_classification() {
    let start = Instant::now();
    let report = classify_g3_1null(6, &budget()).unwrap();
    assert!(!report.has_timeout, "timeout verdicts fail the criterion");

    let canonical = |matrices: Vec<String>| -> Vec<String> {
        let mut out: Vec<String> = matrices
            .iter()
            .map(|s| canonicalize(&pm(s)).compact())
            .collect();
        out.sort();
        out.dedup();
        out
    };

    // Case A1: exactly the five matrices, up to opposites.
    assert_eq!(
        canonical(report.bucket_matrices(Bucket::A1)),
        vec![
            "[0,6|1,0,5|6,0]",
            "[0,6|1,3,2|6,0]",
            "[0,6|1,4,1|6,0]",
            "[0,6|2,0,4|6,0]",
            "[0,6|3,0,3|6,0]",
        ],
        "bucket A1"
    );
    assert_eq!(
        report.bucket_matrices(Bucket::A2),
        vec!["[0,6|1,2,3|2,4]", "[0,6|1,2,3|3,3]"],
        "bucket A2"
    );
    assert_eq!(report.bucket_matrices(Bucket::A3), vec!["[0,6|3,0,3|3,3]"], "bucket A3");
    assert_eq!(
        report.bucket_matrices(Bucket::B),
        vec![
            "[0,6|1,0,5|5,0,1|6,0]",
            "[0,6|2,0,4|4,0,2|6,0]",
            "[0,6|4,0,2|5,0,1|6,0]",
        ],
        "bucket B"
    );

    // The canonicalized union of realized/feasible parameters: the sixteen
    // published rows, the rho = 2 member of the reducible family, and the
    // family rows themselves.
    let published = [
        "[0,6|1,5]",
        "[0,6|2,4]",
        "[0,6|3,3]",
        "[0,6|6,0]",
        "[0,6|1,2,3|2,4]",
        "[0,6|1,2,3|3,3]",
        "[0,6|1,3,2|6,0]",
        "[0,6|1,4,1|6,0]",
        "[0,6|1,0,5|6,0]",
        "[0,6|2,0,4|6,0]",
        "[0,6|3,0,3|3,3]",
        "[0,6|2,0,4|4,0,2|6,0]",
        "[0,6|1,0,5|2,0,4|6,0]",
        "[0,6|1,0,5|5,0,1|6,0]",
        "[0,6|1,1,4|2,2,2|3,3]",
        "[0,6|1,0,5|2,0,4|3,0,3|4,0,2|5,0,1|6,0]",
    ];
    let mut expected: Vec<String> = published.iter().map(|s| s.to_string()).collect();
    expected.push("[0,6|3,0,3|6,0]".to_string()); // family member at rho = 2
    expected.sort();
    let mut got: Vec<String> = report
        .table
        .iter()
        .filter(|row| !row.parameters.contains("..."))
        .map(|row| row.parameters.clone())
        .collect();
    got.sort();
    assert_eq!(got, expected, "parameter table");

    // The reducible family rows, one per tail.
    let families: Vec<&str> =
        report.families.iter().map(|f| f.pattern.as_str()).collect();
    assert!(
        families.contains(&"[0,6|3,0,3|...|3,0,3|6,0] (any rho >= 2)"),
        "published reducible family missing: {families:?}"
    );

    // The triangular rows are labeled per cited reference, not claimed.
    for row in &report.table {
        if row.parameters.starts_with("[0,6|1,2,3|") {
            assert!(
                row.provenance.contains("cited reference"),
                "triangular row provenance: {}",
                row.provenance
            );
        }
    }

    // Every exclusion is backed by completed infeasible runs.
    for candidate in &report.candidates {
        if matches!(candidate.verdict, CandidateVerdict::Excluded { .. }) {
            assert!(candidate.runs.iter().all(|r| r.status != RunStatus::Timeout));
            assert!(candidate
                .runs
                .iter()
                .any(|r| r.status == RunStatus::Infeasible && !r.seeded));
        }
    }
    println!(
        "criterion 5: PASS - buckets A1/A2/A3/B and the parameter table match ({:?})",
        start.elapsed()
    );
}

/// Criterion 6, reproducible parts: c2 in {5, 6} are excluded by completed
/// infeasible searches at radius <= 6; c2 = 2, 7, 8 are realized by the
/// shipped constructions; c2 = 3 is ruled out.
#[test]
fn criterion_6_theorem_9_reproducible() {
    let start = Instant::now();
    let report = classify_g4_2null(&[2, 3, 5, 6, 7, 8], 6, &budget()).unwrap();
    assert!(!report.has_timeout);
    for candidate in &report.candidates {
        let c2 = candidate.candidate.c()[1];
        match c2 {
            2 => assert!(
                matches!(candidate.verdict, CandidateVerdict::Realized { .. }),
                "c2=2: {:?}",
                candidate.verdict
            ),
            3 => assert!(
                matches!(
                    candidate.verdict,
                    CandidateVerdict::Excluded { .. } | CandidateVerdict::ExcludedByTheorem { .. }
                ),
                "c2=3: {:?}",
                candidate.verdict
            ),
            5 | 6 => {
                let CandidateVerdict::Excluded { radius, .. } = candidate.verdict else {
                    panic!("c2={c2} not excluded: {:?}", candidate.verdict);
                };
                assert!(radius <= 6);
                assert!(candidate
                    .runs
                    .iter()
                    .all(|r| r.status != RunStatus::Timeout));
                assert!(candidate
                    .runs
                    .iter()
                    .any(|r| r.status == RunStatus::Infeasible && !r.seeded));
            }
            7 => {
                let CandidateVerdict::Realized { construction } = &candidate.verdict else {
                    panic!("c2=7: {:?}", candidate.verdict);
                };
                assert_eq!(construction, "halved-perfect");
                assert_eq!(candidate.matrices, vec![pm("[0,8|1,0,7|7,0,1|8,0]")]);
            }
            8 => {
                let CandidateVerdict::Realized { construction } = &candidate.verdict else {
                    panic!("c2=8: {:?}", candidate.verdict);
                };
                assert_eq!(construction, "diameter-union-t1");
                assert_eq!(candidate.matrices, vec![pm("[0,8|1,0,7|8,0]")]);
            }
            other => panic!("unexpected candidate c2={other}"),
        }
    }
    println!(
        "criterion 6 (reproducible parts): PASS - c2 in {{5,6}} excluded, {{2,7,8}} realized, \
         3 ruled out ({:?})",
        start.elapsed()
    );
}

/// Criterion 6, as stated for c2 = 4: expected to FAIL, deliberately.
///
/// The exclusion chain for (c1, c2) = (1, 4) bottoms out in the prefix
/// (1, 4, 7, 8) whose extension is [0,8|1,0,7|4,0,4|7,0,1|8,0]. The exact
/// and full problems for it are FEASIBLE on the radius-6 ball (and on radii
/// 7 and 8), with witnesses that re-verify against the graph directly, so no
/// tree of these problems at radius <= 6 can return Infeasible. The
/// criterion's expected exclusion is therefore unattainable as stated; this
/// is a completed feasible result, not a budget timeout. See the solver
/// regression test `blocking_leaf_is_feasible_at_radius_six` for the pinned
/// witness check.
#[test]
fn criterion_6_c2_4_exclusion_as_stated() {
    let report = classify_g4_2null(&[4], 6, &budget()).unwrap();
    let candidate = &report.candidates[0];
    assert!(
        matches!(candidate.verdict, CandidateVerdict::Excluded { .. }),
        "criterion 6 (c2 = 4): FAIL - the driver reports {:?}; the leaf \
         [0,8|1,0,7|4,0,4|7,0,1|8,0] admits a verified radius-6 ball coloring, so the stated \
         radius <= 6 exclusion cannot be produced by any complete solver",
        candidate.verdict
    );
    println!("criterion 6 (c2 = 4): PASS");
}

/// Pinned regression for the criterion-6 finding: the blocking leaf is
/// genuinely feasible at radius 6 and its witness survives an independent
/// recount straight off the adjacency structure.
#[test]
fn blocking_leaf_is_feasible_at_radius_six() {
    let matrix = pm("[0,8|1,0,7|4,0,4|7,0,1|8,0]");
    let ball = ball_graph(4, 6);
    let problem = build_lp_full(&ball, &matrix).unwrap();
    let SolveResult::Feasible(assignment, _) = solve(&problem, &budget()) else {
        panic!("the blocking leaf stopped being feasible; re-examine criterion 6");
    };
    let colors = problem.num_colors();
    let label = |v: u32| -> u32 {
        (0..colors)
            .find(|&c| assignment.values[problem.var(v, c) as usize])
            .expect("vertex colored")
    };
    assert_eq!(label(0), 0);
    for v in 0..ball.vertex_count() as u32 {
        let mut counts = vec![0u32; colors as usize];
        for &u in &ball.adjacency()[v as usize] {
            counts[label(u) as usize] += 1;
        }
        for j in 0..colors {
            let expected = matrix.entry(label(v) as usize, j as usize);
            if ball.interior()[v as usize] {
                assert_eq!(counts[j as usize], expected, "interior {v} color {j}");
            } else {
                assert!(counts[j as usize] <= expected, "boundary {v} color {j}");
            }
        }
    }
}

/// Criterion 7: the solver agrees exactly with brute force on randomized
/// tiny problems and on the one-dimensional rho = 1 candidates; flipping any
/// bit of a feasible coloring assignment breaks verification.
#[test]
fn criterion_7_solver_soundness() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0acce97ed);
    for round in 0..200 {
        let num_vars = rng.gen_range(4..=24u32);
        let num_constraints = rng.gen_range(1..=10);
        let constraints = (0..num_constraints)
            .map(|_| {
                let len = rng.gen_range(1..=num_vars.min(6));
                let mut vars: Vec<u32> = (0..num_vars).collect();
                for i in 0..len as usize {
                    let j = rng.gen_range(i..num_vars as usize);
                    vars.swap(i, j);
                }
                let terms = vars[..len as usize]
                    .iter()
                    .map(|&v| {
                        let magnitude = rng.gen_range(1..=3i32);
                        (v, if rng.gen() { magnitude } else { -magnitude })
                    })
                    .collect();
                let relation = match rng.gen_range(0..3) {
                    0 => Relation::Eq,
                    1 => Relation::Le,
                    _ => Relation::Ge,
                };
                LinearConstraint { terms, relation, bound: rng.gen_range(-5..=5) }
            })
            .collect();
        let problem = FeasibilityProblem::from_parts(num_vars, constraints, Vec::new()).unwrap();
        let solved = solve(&problem, &budget());
        let brute = brute_force(&problem).unwrap();
        assert_eq!(solved.is_feasible(), brute.is_feasible(), "random round {round}");
        if let SolveResult::Feasible(a, _) = &solved {
            assert!(verify_assignment(&problem, a));
        }
    }

    // All rho = 1 candidates over ball(1,4), against brute force.
    let ball = ball_graph(1, 4);
    for c1 in 1..=2u32 {
        let matrix = pm(&format!("[0,2|{c1},{}]", 2 - c1));
        let problem = build_lp_full(&ball, &matrix).unwrap();
        assert!(problem.num_vars() <= 24);
        let solved = solve(&problem, &budget());
        let brute = brute_force(&problem).unwrap();
        assert_eq!(solved.is_feasible(), brute.is_feasible(), "rho1 c={c1}");
        if let SolveResult::Feasible(assignment, _) = solved {
            for i in 0..assignment.values.len() {
                let mut mutated = assignment.clone();
                mutated.values[i] = !mutated.values[i];
                assert!(!verify_assignment(&problem, &mutated), "flip {i} unnoticed");
            }
        }
    }
    println!(
        "criterion 7: PASS - 200 random problems + rho=1 candidates agree with brute force \
         ({:?})",
        start.elapsed()
    );
}

/// Criterion 8: feasible assignments at radius R+1 restrict to feasible
/// assignments at radius R for the full, exact, and at-least modes.
#[test]
fn criterion_8_restriction_monotonicity() {
    let start = Instant::now();
    let mut checked = 0;
    let mut cases: Vec<(usize, String, Option<LpMode>, u32)> = Vec::new();
    for (n, radius) in [(1usize, 3u32), (1, 4), (2, 3), (2, 4), (3, 3)] {
        for matrix in ["perfect", "halved", "distance"] {
            cases.push((n, matrix.to_string(), None, radius));
        }
        cases.push((n, "prefix1".into(), Some(LpMode::AtLeast), radius));
        cases.push((n, "prefix1".into(), Some(LpMode::Exact), radius));
    }
    for (n, which, mode, radius) in cases {
        if checked >= 20 {
            break;
        }
        let big = ball_graph(n, radius + 1);
        let small = ball_graph(n, radius);
        // Canonical order makes the smaller ball a prefix of the bigger.
        assert_eq!(
            &big.vertices()[..small.vertex_count()],
            small.vertices(),
            "prefix property"
        );
        let full_matrix = match which.as_str() {
            "perfect" => constructions::perfect_matrix(n),
            "halved" => constructions::halved_matrix(n),
            "distance" => constructions::distance_matrix(n),
            _ => constructions::perfect_matrix(n),
        };
        let (big_problem, small_problem) = match mode {
            None => (
                build_lp_full(&big, &full_matrix).unwrap(),
                build_lp_full(&small, &full_matrix).unwrap(),
            ),
            Some(mode) => {
                let block = full_matrix.truncate(1);
                (
                    build_lp_partial(&big, &block, mode).unwrap(),
                    build_lp_partial(&small, &block, mode).unwrap(),
                )
            }
        };
        let SolveResult::Feasible(assignment, _) = solve(&big_problem, &budget()) else {
            continue;
        };
        let colors = big_problem.num_colors();
        let restricted: Vec<bool> = (0..small_problem.num_vars())
            .map(|var| {
                let (v, c) = (var / colors, var % colors);
                assignment.values[big_problem.var(v, c) as usize]
            })
            .collect();
        assert!(
            verify_assignment(&small_problem, &Assignment { values: restricted }),
            "restriction failed: n={n} {which} mode={mode:?} radius {radius}"
        );
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} feasible pairs sampled");
    println!(
        "criterion 8: PASS - {checked} feasible results restrict cleanly ({:?})",
        start.elapsed()
    );
}

/// Criterion 9: period probes. Codes matching the c1=1, c2=2 two-null
/// hypotheses have minimal period four on every axis; ternary lifts have
/// period three.
#[test]
fn criterion_9_period_probes() {
    let start = Instant::now();
    for n in 2..=4usize {
        for (id, code) in [
            ("distance", constructions::distance_code(n)),
            ("anticode", constructions::distance_anticode(n)),
        ] {
            // Confirm the hypotheses hold before probing the period.
            let verdict = verify_periodic(&code, None).unwrap();
            let matrix = verdict.matrix.expect("is a CRC");
            assert!(matrix.is_r_null(2));
            assert_eq!(matrix.c()[0], 1);
            assert_eq!(matrix.c()[1], 2);
            for axis in 0..n {
                assert_eq!(code.minimal_period(axis), 4, "{id} n={n} axis {axis}");
            }
        }
    }
    for source in [constructions::h33_singleton(), constructions::h33_repetition()] {
        let code =
            constructions::from_ternary_hamming(3, source.into_iter().collect::<Vec<_>>())
                .unwrap();
        for axis in 0..3 {
            assert_eq!(code.minimal_period(axis), 3);
        }
    }
    println!("criterion 9: PASS - period-four and period-three probes hold ({:?})", start.elapsed());
}

/// Positive control used throughout: restricting a verified construction's
/// true coloring to a ball satisfies the full problem for its matrix.
#[test]
fn known_code_ball_colorings_are_accepted() {
    for (n, radius) in [(2usize, 4u32), (3, 6)] {
        let ball = ball_graph(n, radius);
        for spec in catalog(n).unwrap() {
            if spec.claimed.rho() as u32 > radius {
                continue;
            }
            let labels = grid_labels(&spec.code, ball.vertices()).unwrap();
            let problem = build_lp_full(&ball, &spec.claimed).unwrap();
            let assignment = assignment_from_labels(&problem, &labels);
            assert!(
                verify_assignment(&problem, &assignment),
                "construction {} rejected on ball({n},{radius})",
                spec.id
            );
        }
    }
}
