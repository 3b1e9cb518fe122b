//! Candidate-matrix enumeration, descendant expansion, and classification
//! drivers for null codes in dimensions three and four.
//!
//! The drivers run the ball feasibility problems over enumerated partial
//! matrices and sort candidates into verdicts: `excluded` (always backed by
//! a completed infeasible search, never a timeout), `realized` (confirmed by
//! a shipped construction), `reduced-to-G1` (repeating interior rows), or
//! `feasible-not-excluded` (explicitly not an existence claim).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::codes::{
    self, opposite_code, CodesError, ParamMatrix, PartialMatrix, PeriodicCode, Reducibility,
};
use crate::constructions::{self, ConstructionError};
use crate::feasibility::{
    assignment_from_labels, build_lp_partial, solve, verify_assignment, Budget, BuildError,
    LpMode, SolveResult,
};
use crate::lattice::{ball_graph, BallGraph};

#[derive(Debug)]
pub enum ClassifyError {
    Codes(CodesError),
    Construction(ConstructionError),
    Build(BuildError),
    BadScope { message: String },
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Codes(e) => write!(f, "{e}"),
            Self::Construction(e) => write!(f, "{e}"),
            Self::Build(e) => write!(f, "{e}"),
            Self::BadScope { message } => write!(f, "{message}"),
        }
    }
}

impl core::error::Error for ClassifyError {}

impl From<CodesError> for ClassifyError {
    fn from(e: CodesError) -> Self {
        Self::Codes(e)
    }
}

impl From<ConstructionError> for ClassifyError {
    fn from(e: ConstructionError) -> Self {
        Self::Construction(e)
    }
}

impl From<BuildError> for ClassifyError {
    fn from(e: BuildError) -> Self {
        Self::Build(e)
    }
}

/// All partial matrices passing the structural candidate filters.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    pub n: usize,
    pub rho: usize,
    pub null_prefix: usize,
    pub candidates: Vec<PartialMatrix>,
}

/// Enumerates the `(rho+1) x rho` candidates in dimension `n` with
/// `a_0 = ... = a_{r-1} = 0`: nonnegative entries, nondecreasing
/// subdiagonal, nonincreasing superdiagonal, and every implied `b_i`
/// positive (a class one step further out must be reachable).
pub fn enumerate_partial(n: usize, rho: usize, r: usize) -> CandidateSet {
    assert!(rho >= 1);
    assert!((1..=rho).contains(&r));
    let valency = 2 * n as u32;
    let mut candidates = Vec::new();
    let mut c = vec![0u32; rho];
    let mut a = vec![0u32; rho];
    enumerate_c(valency, &mut c, 0, &mut a, r, &mut candidates);
    CandidateSet { n, rho, null_prefix: r, candidates }
}

fn enumerate_c(
    valency: u32,
    c: &mut Vec<u32>,
    pos: usize,
    a: &mut Vec<u32>,
    r: usize,
    out: &mut Vec<PartialMatrix>,
) {
    if pos == c.len() {
        enumerate_a(valency, c, a, r, r, out);
        return;
    }
    let lower = if pos == 0 { 1 } else { c[pos - 1] };
    for value in lower..=valency {
        c[pos] = value;
        enumerate_c(valency, c, pos + 1, a, r, out);
    }
}

fn enumerate_a(
    valency: u32,
    c: &[u32],
    a: &mut Vec<u32>,
    pos: usize,
    r: usize,
    out: &mut Vec<PartialMatrix>,
) {
    if pos == a.len() {
        if let Some(candidate) = build_candidate(valency, a, c) {
            out.push(candidate);
        }
        return;
    }
    for value in 0..=valency {
        a[pos] = value;
        enumerate_a(valency, c, a, pos + 1, r, out);
    }
    a[pos] = 0;
}

fn build_candidate(valency: u32, a: &[u32], c: &[u32]) -> Option<PartialMatrix> {
    let rho = a.len();
    let mut implied = Vec::with_capacity(rho);
    for i in 0..rho {
        let ci = if i == 0 { 0 } else { c[i - 1] };
        let b = valency.checked_sub(ci + a[i])?;
        if b < 1 {
            return None;
        }
        if let Some(&prev) = implied.last() {
            if b > prev {
                return None;
            }
        }
        implied.push(b);
    }
    let in_block = implied[..rho - 1].to_vec();
    PartialMatrix::new(valency, a.to_vec(), in_block, c.to_vec()).ok()
}

/// All `(rho+2) x (rho+1)` matrices with `b` as upper-left block that
/// satisfy the monotonicity conditions. The within-block superdiagonal
/// entry is forced by the row sums; the choices are `a_rho` and `c_{rho+1}`.
pub fn descendants(block: &PartialMatrix) -> Vec<PartialMatrix> {
    let valency = block.valency();
    let rho = block.rho();
    let mut b = block.b().to_vec();
    b.push(block.implied_b(rho - 1));
    if b.len() >= 2 && b[b.len() - 1] > b[b.len() - 2] {
        return Vec::new();
    }
    let c_last = block.c()[rho - 1];
    let mut out = Vec::new();
    for a_last in 0..=valency.saturating_sub(c_last) {
        for c_next in c_last..=valency {
            let mut a = block.a().to_vec();
            a.push(a_last);
            let mut c = block.c().to_vec();
            c.push(c_next);
            if let Ok(candidate) = PartialMatrix::new(valency, a, b.clone(), c) {
                out.push(candidate);
            }
        }
    }
    out
}

/// A partial matrix can prefix a code of covering radius `>= rho` only if
/// every class below `rho` can reach the next one: all implied `b_i >= 1`.
pub fn is_viable(block: &PartialMatrix) -> bool {
    (0..block.rho()).all(|i| block.implied_b(i) >= 1)
}

/// [`descendants`] filtered by [`is_viable`]; the expansion the drivers use.
pub fn viable_descendants(block: &PartialMatrix) -> Vec<PartialMatrix> {
    descendants(block).into_iter().filter(is_viable).collect()
}

/// The lexicographically smaller of a matrix and its opposite, in
/// compact-string order; classification tables are stated up to opposites.
pub fn canonicalize(matrix: &ParamMatrix) -> ParamMatrix {
    let opposite = matrix.opposite();
    if opposite.compact() < matrix.compact() {
        opposite
    } else {
        matrix.clone()
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
pub enum RunStatus {
    Feasible,
    Infeasible,
    Timeout,
}

/// One solver invocation, with enough detail to reproduce it exactly.
#[derive(Debug, Clone, Serialize)]
pub struct LpRun {
    pub candidate: String,
    pub mode: LpMode,
    pub rho: u32,
    pub radius: u32,
    pub status: RunStatus,
    /// True when feasibility came from a verified construction witness
    /// rather than search.
    pub seeded: bool,
    pub nodes: u64,
    pub propagations: u64,
    pub problem_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CandidateVerdict {
    /// Backed by completed infeasible searches recorded in `runs`.
    Excluded { mode: LpMode, rho: u32, radius: u32 },
    /// Ruled out by a structural theorem instead of a solver run.
    ExcludedByTheorem { theorem: String },
    /// The feasibility problems admit solutions but no shipped construction
    /// matches; explicitly not an existence claim.
    FeasibleNotExcluded { note: Option<String> },
    /// Confirmed by a shipped construction (verified exactly).
    Realized { construction: String },
    /// Repeating interior rows: the matrix is a multiple of a
    /// one-dimensional code's matrix.
    ReducedToG1 { g1: ParamMatrix },
    /// A budget ran out; proves nothing either way.
    TimedOut,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
pub enum Bucket {
    A1,
    A2,
    A3,
    B,
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateReport {
    pub candidate: PartialMatrix,
    pub rho: u32,
    pub bucket: Option<Bucket>,
    pub verdict: CandidateVerdict,
    /// Concrete full matrices attributed to this candidate.
    pub matrices: Vec<ParamMatrix>,
    pub runs: Vec<LpRun>,
}

/// An infinite family established through the reduction of repeating
/// interior rows, rather than per-rho solving.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub pattern: String,
    pub g1_matrix: ParamMatrix,
    pub sample: ParamMatrix,
    pub description: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub parameters: String,
    pub provenance: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub scope: String,
    pub n: usize,
    pub radius: u32,
    pub null_prefix: usize,
    pub version: String,
    pub candidates: Vec<CandidateReport>,
    pub families: Vec<FamilyReport>,
    /// Canonicalized union of realized and feasible parameters.
    pub table: Vec<TableRow>,
    pub has_timeout: bool,
}

impl ClassificationReport {
    fn new(scope: &str, n: usize, radius: u32, null_prefix: usize) -> Self {
        Self {
            scope: scope.to_string(),
            n,
            radius,
            null_prefix,
            version: env!("CARGO_PKG_VERSION").to_string(),
            candidates: Vec::new(),
            families: Vec::new(),
            table: Vec::new(),
            has_timeout: false,
        }
    }

    /// Compact strings of the concrete matrices in a bucket, sorted.
    pub fn bucket_matrices(&self, bucket: Bucket) -> Vec<String> {
        let mut out: Vec<String> = self
            .candidates
            .iter()
            .filter(|c| c.bucket == Some(bucket))
            .flat_map(|c| c.matrices.iter().map(|m| m.compact()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Canonicalized compact strings of all attributed concrete matrices.
    pub fn parameter_set(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .candidates
            .iter()
            .flat_map(|c| c.matrices.iter().map(|m| canonicalize(m).compact()))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Matrices the literature realizes in the triangular grid; labeled as such
/// without machine verification (the instances are user-supplied inputs).
const TRIANGULAR_CITED: [&str; 2] = ["[0,6|1,2,3|2,4]", "[0,6|1,2,3|3,3]"];

struct VerifiedEntry {
    id: String,
    code: PeriodicCode,
    matrix: ParamMatrix,
}

fn verified_entries(n: usize) -> Result<Vec<VerifiedEntry>, ClassifyError> {
    let mut out = Vec::new();
    for spec in constructions::catalog(n)? {
        let verdict = codes::verify_periodic(&spec.code, Some(&spec.claimed))?;
        let matrix = verdict.matrix.clone().ok_or_else(|| ClassifyError::BadScope {
            message: format!("catalog entry {} failed verification", spec.id),
        })?;
        if verdict.matches_expected != Some(true) {
            return Err(ClassifyError::BadScope {
                message: format!(
                    "catalog entry {} verified to {} instead of {}",
                    spec.id, matrix, spec.claimed
                ),
            });
        }
        out.push(VerifiedEntry { id: spec.id, code: spec.code, matrix });
    }
    Ok(out)
}

struct Driver<'a> {
    entries: &'a [VerifiedEntry],
    budget: &'a Budget,
    balls: BTreeMap<u32, BallGraph>,
    opposites: BTreeMap<usize, Option<PeriodicCode>>,
    label_cache: BTreeMap<(usize, bool, u32), Option<Vec<u32>>>,
    result_cache: BTreeMap<(String, u8, u32), LpRun>,
    n: usize,
}

struct RunOutcome {
    status: RunStatus,
    run: LpRun,
}

fn mode_tag(mode: LpMode) -> u8 {
    match mode {
        LpMode::Full => 0,
        LpMode::AtLeast => 1,
        LpMode::Exact => 2,
        LpMode::Greater => 3,
    }
}

impl<'a> Driver<'a> {
    fn new(n: usize, entries: &'a [VerifiedEntry], budget: &'a Budget) -> Self {
        Self {
            entries,
            budget,
            balls: BTreeMap::new(),
            opposites: BTreeMap::new(),
            label_cache: BTreeMap::new(),
            result_cache: BTreeMap::new(),
            n,
        }
    }

    fn ball(&mut self, radius: u32) -> &BallGraph {
        self.balls.entry(radius).or_insert_with(|| ball_graph(self.n, radius))
    }

    /// Construction witnesses matching the candidate prefix under the mode.
    fn seeds(&self, block: &PartialMatrix, mode: LpMode) -> Vec<(usize, bool)> {
        let rho = block.rho();
        let mut out = Vec::new();
        for (idx, entry) in self.entries.iter().enumerate() {
            for (reversed, matrix) in
                [(false, entry.matrix.clone()), (true, entry.matrix.opposite())]
            {
                let fits = match mode {
                    LpMode::AtLeast => matrix.rho() >= rho,
                    LpMode::Exact | LpMode::Full => matrix.rho() == rho,
                    LpMode::Greater => matrix.rho() > rho,
                };
                if fits && matrix.truncate(rho) == *block {
                    out.push((idx, reversed));
                }
            }
        }
        out
    }

    /// Ball distance labels induced by a (possibly reversed) catalog code,
    /// cached per entry and radius.
    fn seed_labels(&mut self, entry: usize, reversed: bool, radius: u32) -> Option<Vec<u32>> {
        let key = (entry, reversed, radius);
        if let Some(cached) = self.label_cache.get(&key) {
            return cached.clone();
        }
        self.ball(radius);
        let code = if reversed {
            let entries = self.entries;
            self.opposites
                .entry(entry)
                .or_insert_with(|| opposite_code(&entries[entry].code).ok())
                .clone()
        } else {
            Some(self.entries[entry].code.clone())
        };
        let labels = code.and_then(|code| {
            codes::grid_labels(&code, self.balls[&radius].vertices()).ok()
        });
        self.label_cache.insert(key, labels.clone());
        labels
    }

    /// Runs one feasibility problem: witnesses from matching constructions
    /// are tried first, then the complete search.
    fn run_partial(
        &mut self,
        block: &PartialMatrix,
        mode: LpMode,
        radius: u32,
    ) -> Result<RunOutcome, ClassifyError> {
        let budget = self.budget.clone();
        self.run_partial_with(block, mode, radius, &budget)
    }

    fn run_partial_with(
        &mut self,
        block: &PartialMatrix,
        mode: LpMode,
        radius: u32,
        budget: &Budget,
    ) -> Result<RunOutcome, ClassifyError> {
        let mode_tag = mode_tag(mode);
        let compact = block.compact();
        // An infeasible restriction stays infeasible on any larger ball
        // (modes full/=/>= restrict); cite the completed smaller-radius run.
        if mode != LpMode::Greater {
            for r in 3..=radius {
                if let Some(run) = self.result_cache.get(&(compact.clone(), mode_tag, r)) {
                    if run.status == RunStatus::Infeasible {
                        return Ok(RunOutcome { status: RunStatus::Infeasible, run: run.clone() });
                    }
                    if r == radius && run.status == RunStatus::Feasible {
                        return Ok(RunOutcome { status: RunStatus::Feasible, run: run.clone() });
                    }
                }
            }
        }
        let seeds = self.seeds(block, mode);
        let ball = self.ball(radius);
        let problem = build_lp_partial(ball, block, mode)?;
        let hash = format!("{:016x}", problem.hash64());
        for (entry, reversed) in seeds {
            let Some(labels) = self.seed_labels(entry, reversed, radius) else {
                continue;
            };
            let assignment = assignment_from_labels(&problem, &labels);
            if verify_assignment(&problem, &assignment) {
                let run = LpRun {
                    candidate: block.compact(),
                    mode,
                    rho: block.rho() as u32,
                    radius,
                    status: RunStatus::Feasible,
                    seeded: true,
                    nodes: 0,
                    propagations: 0,
                    problem_hash: hash,
                };
                self.result_cache.insert((compact, mode_tag, radius), run.clone());
                return Ok(RunOutcome { status: RunStatus::Feasible, run });
            }
        }
        let result = solve(&problem, budget);
        let outcome =
            self.outcome_from(block.compact(), mode, block.rho() as u32, radius, hash, &result);
        if outcome.status != RunStatus::Timeout {
            self.result_cache.insert((compact, mode_tag, radius), outcome.run.clone());
        }
        Ok(outcome)
    }

    fn run_exact_extension(
        &mut self,
        block: &PartialMatrix,
        radius: u32,
    ) -> Result<RunOutcome, ClassifyError> {
        self.run_partial(block, LpMode::Exact, radius)
    }

    fn outcome_from(
        &self,
        candidate: String,
        mode: LpMode,
        rho: u32,
        radius: u32,
        problem_hash: String,
        result: &SolveResult,
    ) -> RunOutcome {
        let status = match result {
            SolveResult::Feasible(..) => RunStatus::Feasible,
            SolveResult::Infeasible(_) => RunStatus::Infeasible,
            SolveResult::Timeout(_) => RunStatus::Timeout,
        };
        let stats = result.stats();
        RunOutcome {
            status,
            run: LpRun {
                candidate,
                mode,
                rho,
                radius,
                status,
                seeded: false,
                nodes: stats.nodes,
                propagations: stats.propagations,
                problem_hash,
            },
        }
    }

    /// Marks a concrete full matrix as realized when a verified construction
    /// (or its opposite) has exactly that matrix.
    fn realization(&self, matrix: &ParamMatrix) -> Option<String> {
        for entry in self.entries {
            if entry.matrix == *matrix {
                return Some(entry.id.clone());
            }
            if entry.matrix.opposite() == *matrix {
                return Some(format!("opposite({})", entry.id));
            }
        }
        None
    }

    fn attributed_verdict(&self, matrix: &ParamMatrix) -> CandidateVerdict {
        if let Some(id) = self.realization(matrix) {
            CandidateVerdict::Realized { construction: id }
        } else if TRIANGULAR_CITED.contains(&matrix.compact().as_str()) {
            CandidateVerdict::FeasibleNotExcluded {
                note: Some(String::from("realized per cited reference (triangular grid)")),
            }
        } else {
            CandidateVerdict::FeasibleNotExcluded { note: None }
        }
    }
}

fn provenance_of(verdict: &CandidateVerdict) -> String {
    match verdict {
        CandidateVerdict::Realized { construction } => construction.clone(),
        CandidateVerdict::FeasibleNotExcluded { note: Some(note) } => note.clone(),
        CandidateVerdict::FeasibleNotExcluded { note: None } => {
            String::from("feasible, not excluded (no existence claim)")
        }
        CandidateVerdict::ReducedToG1 { g1 } => format!("reduced to G_1: {g1}"),
        other => format!("{other:?}"),
    }
}

fn push_table_rows(report: &mut ClassificationReport) {
    let mut rows: BTreeMap<String, String> = BTreeMap::new();
    for candidate in &report.candidates {
        // Matrices absorbed into a reduced family are covered by its row.
        let include = matches!(
            candidate.verdict,
            CandidateVerdict::Realized { .. } | CandidateVerdict::FeasibleNotExcluded { .. }
        );
        if !include {
            continue;
        }
        for matrix in &candidate.matrices {
            let key = canonicalize(matrix).compact();
            rows.entry(key).or_insert_with(|| provenance_of(&candidate.verdict));
        }
    }
    for family in &report.families {
        rows.entry(family.pattern.clone())
            .or_insert_with(|| family.description.clone());
    }
    report.table = rows
        .into_iter()
        .map(|(parameters, provenance)| TableRow { parameters, provenance })
        .collect();
}

/// The covering-radius-one classification: runs the exactly-one-ball
/// problem for every `rho = 1` candidate with `a_0 = 0`.
pub fn classify_rho1(
    n: usize,
    radius: u32,
    budget: &Budget,
) -> Result<ClassificationReport, ClassifyError> {
    let entries = verified_entries(n)?;
    let mut driver = Driver::new(n, &entries, budget);
    let mut report = ClassificationReport::new("rho1", n, radius, 1);
    classify_rho1_into(&mut driver, radius, &mut report)?;
    push_table_rows(&mut report);
    Ok(report)
}

fn classify_rho1_into(
    driver: &mut Driver<'_>,
    radius: u32,
    report: &mut ClassificationReport,
) -> Result<(), ClassifyError> {
    let valency = 2 * driver.n as u32;
    for c1 in 1..=valency {
        let block = PartialMatrix::new(valency, vec![0], vec![], vec![c1]).expect("rho=1 block");
        let outcome = driver.run_exact_extension(&block, radius)?;
        let mut matrices = Vec::new();
        let verdict = match outcome.status {
            RunStatus::Infeasible => CandidateVerdict::Excluded {
                mode: LpMode::Exact,
                rho: 1,
                radius,
            },
            RunStatus::Timeout => {
                report.has_timeout = true;
                CandidateVerdict::TimedOut
            }
            RunStatus::Feasible => {
                let extension = block.extension()?;
                let verdict = driver.attributed_verdict(&extension);
                matrices.push(extension);
                verdict
            }
        };
        report.candidates.push(CandidateReport {
            candidate: block,
            rho: 1,
            bucket: None,
            verdict,
            matrices,
            runs: vec![outcome.run],
        });
    }
    Ok(())
}

/// The full decision tree for 1-null codes in dimension three: the
/// radius-one case, the theorem-backed dispatches, and the feasibility
/// analysis of every `3 x 2` candidate with descendant expansion.
pub fn classify_g3_1null(
    radius: u32,
    budget: &Budget,
) -> Result<ClassificationReport, ClassifyError> {
    let entries = verified_entries(3)?;
    let mut driver = Driver::new(3, &entries, budget);
    let mut report = ClassificationReport::new("g3-1null", 3, radius, 1);

    classify_rho1_into(&mut driver, radius, &mut report)?;

    for block in enumerate_partial(3, 2, 1).candidates {
        classify_g3_rho2_candidate(&mut driver, block, radius, &mut report)?;
    }

    push_table_rows(&mut report);
    Ok(report)
}

fn theorem_dispatch_g3(
    driver: &Driver<'_>,
    block: &PartialMatrix,
) -> Option<(CandidateVerdict, Vec<ParamMatrix>)> {
    let a = block.a();
    let c = block.c();
    if a == [0, 0] && c == [1, 2] {
        // 2-null with c1 = 1, c2 = 2: such codes arise from the binary
        // Hamming graph; the known ones are the singleton distance
        // partition and its merge with the opposite.
        let matrices = vec![
            constructions::distance_matrix(driver.n),
            constructions::anticode_matrix(driver.n),
        ];
        return Some((
            CandidateVerdict::Realized {
                construction: String::from("singleton-h62 + pair-h62 (binary Hamming lift family)"),
            },
            matrices,
        ));
    }
    if a[1] == 1 {
        // 1-null with a_1 = 1 forces a period-three (ternary Hamming) lift;
        // the classified instances leave only the singleton in H(3,3).
        let singleton = codes::parse_compact("[0,6|1,1,4|2,2,2|3,3]").expect("singleton matrix");
        if *block == singleton.truncate(2) {
            return Some((
                CandidateVerdict::Realized { construction: String::from("singleton-h33") },
                vec![singleton],
            ));
        }
        return Some((
            CandidateVerdict::ExcludedByTheorem {
                theorem: String::from(
                    "a_1 = 1 forces a ternary Hamming lift; no classified code has these parameters",
                ),
            },
            Vec::new(),
        ));
    }
    None
}

fn classify_g3_rho2_candidate(
    driver: &mut Driver<'_>,
    block: PartialMatrix,
    radius: u32,
    report: &mut ClassificationReport,
) -> Result<(), ClassifyError> {
    if let Some((verdict, matrices)) = theorem_dispatch_g3(driver, &block) {
        report.candidates.push(CandidateReport {
            candidate: block,
            rho: 2,
            bucket: None,
            verdict,
            matrices,
            runs: Vec::new(),
        });
        return Ok(());
    }

    let mut runs = Vec::new();
    let ge = driver.run_partial(&block, LpMode::AtLeast, radius)?;
    let ge_status = ge.status;
    runs.push(ge.run);

    let push = |report: &mut ClassificationReport, entry: CandidateReport| {
        report.candidates.push(entry)
    };

    match ge_status {
        RunStatus::Infeasible => {
            push(report, CandidateReport {
                candidate: block,
                rho: 2,
                bucket: None,
                verdict: CandidateVerdict::Excluded { mode: LpMode::AtLeast, rho: 2, radius },
                matrices: Vec::new(),
                runs,
            });
            return Ok(());
        }
        RunStatus::Timeout => {
            report.has_timeout = true;
            push(report, CandidateReport {
                candidate: block,
                rho: 2,
                bucket: None,
                verdict: CandidateVerdict::TimedOut,
                matrices: Vec::new(),
                runs,
            });
            return Ok(());
        }
        RunStatus::Feasible => {}
    }

    let eq = driver.run_partial(&block, LpMode::Exact, radius)?;
    let eq_status = eq.status;
    runs.push(eq.run);
    if eq_status == RunStatus::Timeout {
        report.has_timeout = true;
        push(report, CandidateReport {
            candidate: block,
            rho: 2,
            bucket: None,
            verdict: CandidateVerdict::TimedOut,
            matrices: Vec::new(),
            runs,
        });
        return Ok(());
    }

    if eq_status == RunStatus::Feasible {
        let gt = driver.run_partial(&block, LpMode::Greater, radius)?;
        let gt_status = gt.status;
        runs.push(gt.run);
        let extension = block.extension()?;
        match gt_status {
            RunStatus::Timeout => {
                report.has_timeout = true;
                push(report, CandidateReport {
                    candidate: block,
                    rho: 2,
                    bucket: None,
                    verdict: CandidateVerdict::TimedOut,
                    matrices: Vec::new(),
                    runs,
                });
            }
            RunStatus::Infeasible => {
                // Covering radius exactly two.
                let verdict = driver.attributed_verdict(&extension);
                push(report, CandidateReport {
                    candidate: block,
                    rho: 2,
                    bucket: Some(Bucket::A1),
                    verdict,
                    matrices: vec![extension],
                    runs,
                });
            }
            RunStatus::Feasible => {
                let expansion =
                    expand_descendants(driver, &block, radius, report)?;
                let bucket = if expansion.any_feasible { Bucket::A3 } else { Bucket::A2 };
                if expansion.timed_out {
                    report.has_timeout = true;
                }
                let verdict = driver.attributed_verdict(&extension);
                push(report, CandidateReport {
                    candidate: block,
                    rho: 2,
                    bucket: Some(bucket),
                    verdict,
                    matrices: vec![extension],
                    runs,
                });
            }
        }
        return Ok(());
    }

    // LP_{=2} infeasible: radius exactly two is ruled out; the candidate
    // survives only through viable descendants at radius three and beyond.
    let expansion = expand_descendants(driver, &block, radius, report)?;
    if expansion.timed_out {
        report.has_timeout = true;
    }
    if expansion.any_feasible {
        push(report, CandidateReport {
            candidate: block,
            rho: 2,
            bucket: Some(Bucket::B),
            verdict: CandidateVerdict::FeasibleNotExcluded {
                note: Some(String::from(
                    "covering radius two excluded; survives through rho = 3 descendants",
                )),
            },
            matrices: expansion.feasible_extensions,
            runs,
        });
    } else {
        push(report, CandidateReport {
            candidate: block,
            rho: 2,
            bucket: None,
            verdict: CandidateVerdict::Excluded { mode: LpMode::Exact, rho: 2, radius },
            matrices: Vec::new(),
            runs,
        });
    }
    Ok(())
}

struct Expansion {
    any_feasible: bool,
    timed_out: bool,
    feasible_extensions: Vec<ParamMatrix>,
}

/// Runs the at-least problem on every viable descendant, recording each as
/// its own candidate entry; repeating-row extensions become family reports.
fn expand_descendants(
    driver: &mut Driver<'_>,
    block: &PartialMatrix,
    radius: u32,
    report: &mut ClassificationReport,
) -> Result<Expansion, ClassifyError> {
    let mut expansion =
        Expansion { any_feasible: false, timed_out: false, feasible_extensions: Vec::new() };
    for descendant in viable_descendants(block) {
        let rho = descendant.rho() as u32;
        let outcome = driver.run_partial(&descendant, LpMode::AtLeast, radius)?;
        let status = outcome.status;
        let runs = vec![outcome.run];
        let (verdict, matrices, bucket) = match status {
            RunStatus::Infeasible => (
                CandidateVerdict::Excluded { mode: LpMode::AtLeast, rho, radius },
                Vec::new(),
                None,
            ),
            RunStatus::Timeout => {
                expansion.timed_out = true;
                (CandidateVerdict::TimedOut, Vec::new(), None)
            }
            RunStatus::Feasible => {
                expansion.any_feasible = true;
                let extension = descendant.extension()?;
                expansion.feasible_extensions.push(extension.clone());
                match codes::reducible_check(&extension, driver.n as u32) {
                    Reducibility::Reduced(g1) => {
                        let pattern = family_pattern(&extension);
                        report.families.push(FamilyReport {
                            pattern: pattern.clone(),
                            g1_matrix: g1.clone(),
                            sample: extension.clone(),
                            description: format!(
                                "multiples of the one-dimensional code {g1}; one member per covering radius"
                            ),
                        });
                        (CandidateVerdict::ReducedToG1 { g1 }, vec![extension], None)
                    }
                    _ => {
                        let verdict = driver.attributed_verdict(&extension);
                        (verdict, vec![extension], None)
                    }
                }
            }
        };
        report.candidates.push(CandidateReport {
            candidate: descendant,
            rho,
            bucket,
            verdict,
            matrices,
            runs,
        });
    }
    Ok(expansion)
}

/// A symbolic row for a repeating-interior family, e.g.
/// `[0,6|3,0,3|...|3,0,3|6,0] (any rho >= 2)`.
fn family_pattern(sample: &ParamMatrix) -> String {
    let rho = sample.rho();
    let c1 = sample.c()[0];
    let a1 = sample.a()[1];
    let b1 = sample.b()[1];
    let last_c = sample.c()[rho - 1];
    let last_a = sample.a()[rho];
    format!(
        "[{},{}|{},{},{}|...|{},{},{}|{},{}] (any rho >= 2)",
        sample.a()[0],
        sample.b()[0],
        c1,
        a1,
        b1,
        c1,
        a1,
        b1,
        last_c,
        last_a
    )
}

/// The two-null classification in dimension four for `c_1 = 1` and the
/// given `c_2` values: theorem-backed dispatches for `c_2 = 2, 3`,
/// realized constructions for `c_2 = 7, 8`, and exclusion trees with radius
/// escalation for the rest.
pub fn classify_g4_2null(
    c2_values: &[u32],
    max_radius: u32,
    budget: &Budget,
) -> Result<ClassificationReport, ClassifyError> {
    if let Some(&bad) = c2_values.iter().find(|&&c| !(2..=8).contains(&c)) {
        return Err(ClassifyError::BadScope { message: format!("c2 = {bad} out of range 2..=8") });
    }
    let entries = verified_entries(4)?;
    let mut driver = Driver::new(4, &entries, budget);
    let mut report = ClassificationReport::new("g4-2null", 4, max_radius, 2);

    for &c2 in c2_values {
        let block = PartialMatrix::new(8, vec![0, 0], vec![8], vec![1, c2]).expect("2-null block");
        match c2 {
            2 => {
                report.candidates.push(CandidateReport {
                    candidate: block,
                    rho: 2,
                    bucket: None,
                    verdict: CandidateVerdict::Realized {
                        construction: String::from(
                            "singleton-h82 + pair-h82 (binary Hamming lift family)",
                        ),
                    },
                    matrices: vec![
                        constructions::distance_matrix(4),
                        constructions::anticode_matrix(4),
                    ],
                    runs: Vec::new(),
                });
            }
            7 | 8 => {
                let matrix = if c2 == 7 {
                    constructions::halved_matrix(4)
                } else {
                    constructions::diameter_union_matrix(4, 1)
                };
                let verdict = driver.attributed_verdict(&matrix);
                report.candidates.push(CandidateReport {
                    candidate: block,
                    rho: 2,
                    bucket: None,
                    verdict,
                    matrices: vec![matrix],
                    runs: Vec::new(),
                });
            }
            3 => {
                // One bounded attempt at the smallest radius; the theorem
                // covers it if the solver cannot within budget.
                let mut runs = Vec::new();
                let outcome = driver.run_partial(&block, LpMode::AtLeast, 3.min(max_radius))?;
                let status = outcome.status;
                runs.push(outcome.run);
                let verdict = match status {
                    RunStatus::Infeasible => CandidateVerdict::Excluded {
                        mode: LpMode::AtLeast,
                        rho: 2,
                        radius: 3.min(max_radius),
                    },
                    _ => CandidateVerdict::ExcludedByTheorem {
                        theorem: String::from(
                            "2-null codes with c_1 <= 2 and c_2 = 3 exist only in dimension two",
                        ),
                    },
                };
                report.candidates.push(CandidateReport {
                    candidate: block,
                    rho: 2,
                    bucket: None,
                    verdict,
                    matrices: Vec::new(),
                    runs,
                });
            }
            _ => {
                classify_g4_exclusion(&mut driver, block, max_radius, &mut report)?;
            }
        }
    }

    push_table_rows(&mut report);
    Ok(report)
}

enum TreeOutcome {
    Excluded,
    NotExcluded,
    TimedOut,
}

/// Repeating interior rows force the code to be an n-fold multiple of a
/// one-dimensional code, so every entry must be divisible by n; prefixes
/// violating that cannot extend to any parameter matrix.
fn reduction_excluded(block: &PartialMatrix, n: u32) -> bool {
    let rho = block.rho();
    if rho < 3 {
        return false;
    }
    let triple = |i: usize| (block.c()[i - 1], block.a()[i], block.b()[i]);
    let mut repeating = false;
    'outer: for i in 1..rho - 1 {
        for j in (i + 1)..rho - 1 {
            if triple(i) == triple(j) {
                repeating = true;
                break 'outer;
            }
        }
    }
    if !repeating {
        return false;
    }
    let divisible = block
        .a()
        .iter()
        .chain(block.b())
        .chain(block.c())
        .all(|&x| x % n == 0);
    !divisible
}

fn classify_g4_exclusion(
    driver: &mut Driver<'_>,
    block: PartialMatrix,
    max_radius: u32,
    report: &mut ClassificationReport,
) -> Result<(), ClassifyError> {
    let depth_cap = 2 * driver.n as u32 + 1;
    let mut runs = Vec::new();
    let mut timed_out = false;
    for radius in 3..=max_radius {
        match exclude_tree(driver, &block, radius, depth_cap, &mut runs)? {
            TreeOutcome::Excluded => {
                report.candidates.push(CandidateReport {
                    candidate: block,
                    rho: 2,
                    bucket: None,
                    verdict: CandidateVerdict::Excluded { mode: LpMode::AtLeast, rho: 2, radius },
                    matrices: Vec::new(),
                    runs,
                });
                return Ok(());
            }
            TreeOutcome::NotExcluded => {}
            TreeOutcome::TimedOut => {
                timed_out = true;
                break;
            }
        }
    }
    report.has_timeout |= timed_out;
    report.candidates.push(CandidateReport {
        candidate: block,
        rho: 2,
        bucket: None,
        verdict: if timed_out {
            CandidateVerdict::TimedOut
        } else {
            CandidateVerdict::FeasibleNotExcluded {
                note: Some(String::from("no radius within bounds yielded a completed exclusion")),
            }
        },
        matrices: Vec::new(),
        runs,
    });
    Ok(())
}

/// Excludes a prefix by showing no covering radius can realize it: the
/// exact problem is infeasible and every viable descendant is excluded
/// recursively, up to the covering-radius bound for irreducible codes
/// (reducible ones are ruled out arithmetically). A node-capped at-least
/// run serves as a whole-subtree shortcut. Only completed searches count.
fn exclude_tree(
    driver: &mut Driver<'_>,
    block: &PartialMatrix,
    radius: u32,
    depth_cap: u32,
    runs: &mut Vec<LpRun>,
) -> Result<TreeOutcome, ClassifyError> {
    if reduction_excluded(block, driver.n as u32) {
        return Ok(TreeOutcome::Excluded);
    }
    let eq = driver.run_partial(block, LpMode::Exact, radius)?;
    let eq_status = eq.status;
    runs.push(eq.run);
    match eq_status {
        RunStatus::Feasible => return Ok(TreeOutcome::NotExcluded),
        RunStatus::Timeout => return Ok(TreeOutcome::TimedOut),
        RunStatus::Infeasible => {}
    }
    if block.rho() as u32 >= depth_cap {
        // No irreducible code has covering radius beyond the cap, and the
        // reducible families were ruled out above.
        return Ok(TreeOutcome::Excluded);
    }
    let descendants = viable_descendants(block);
    if descendants.is_empty() {
        return Ok(TreeOutcome::Excluded);
    }
    // Shortcut: a completed at-least refutation covers all descendants.
    let shortcut_budget = Budget {
        node_limit: Some(
            driver
                .budget
                .node_limit
                .map_or(2_000_000, |limit| limit.min(2_000_000)),
        ),
        time_limit: driver.budget.time_limit,
    };
    let ge = driver.run_partial_with(block, LpMode::AtLeast, radius, &shortcut_budget)?;
    let ge_status = ge.status;
    runs.push(ge.run);
    if ge_status == RunStatus::Infeasible {
        return Ok(TreeOutcome::Excluded);
    }
    for descendant in descendants {
        match exclude_tree(driver, &descendant, radius, depth_cap, runs)? {
            TreeOutcome::Excluded => {}
            other => return Ok(other),
        }
    }
    Ok(TreeOutcome::Excluded)
}
