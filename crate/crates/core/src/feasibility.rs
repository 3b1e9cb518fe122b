//! Exact 0-1 feasibility for grid-ball coloring problems.
//!
//! A candidate parameter matrix (full or partial) is turned into a system of
//! integer linear constraints over binary variables, one per (vertex, color)
//! pair of a ball subgraph: interior vertices carry exact neighbor-count
//! equations, boundary vertices carry inequalities, every vertex takes
//! exactly one color, and the code color is anchored at the center.
//!
//! The solver is a complete depth-first search with bound-consistency
//! propagation. `Infeasible` is returned only after the search space is
//! exhausted; running out of budget is a distinct `Timeout` outcome, so
//! infeasibility results can be cited as nonexistence proofs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use serde::Serialize;

use crate::codes::{ParamMatrix, PartialMatrix};
use crate::lattice::BallGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    ValencyMismatch { matrix: u32, ball: u32 },
    ConflictingAnchors { var: u32 },
    BruteForceTooLarge { vars: u32, max: u32 },
    BadMode,
    OpbParse { line: usize, message: String },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ValencyMismatch { matrix, ball } => {
                write!(f, "matrix valency {matrix} does not match ball valency {ball}")
            }
            Self::ConflictingAnchors { var } => {
                write!(f, "variable {var} anchored to both values")
            }
            Self::BruteForceTooLarge { vars, max } => {
                write!(f, "brute force limited to {max} variables, got {vars}")
            }
            Self::BadMode => write!(f, "partial problems need one of the >=, =, > modes"),
            Self::OpbParse { line, message } => write!(f, "opb line {line}: {message}"),
        }
    }
}

impl core::error::Error for BuildError {}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

impl Relation {
    fn token(self) -> &'static str {
        match self {
            Self::Eq => "=",
            Self::Le => "<=",
            Self::Ge => ">=",
        }
    }
}

/// `sum(coeff * var) relation bound` over binary variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearConstraint {
    pub terms: Vec<(u32, i32)>,
    pub relation: Relation,
    pub bound: i32,
}

impl LinearConstraint {
    pub fn satisfied_by(&self, values: &[bool]) -> bool {
        let sum: i32 = self
            .terms
            .iter()
            .map(|&(var, coeff)| if values[var as usize] { coeff } else { 0 })
            .sum();
        match self.relation {
            Relation::Eq => sum == self.bound,
            Relation::Le => sum <= self.bound,
            Relation::Ge => sum >= self.bound,
        }
    }
}

/// Which of the ball coloring problems a [`FeasibilityProblem`] encodes.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LpMode {
    /// Full matrix, exactly `rho + 1` colors, no slack color.
    Full,
    /// Partial matrix; the slack color is unconstrained (covering radius >= rho).
    AtLeast,
    /// Partial matrix; the slack color is empty (covering radius = rho).
    Exact,
    /// Partial matrix; the slack color is nonempty (covering radius > rho).
    Greater,
}

impl fmt::Display for LpMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Full => "full",
            Self::AtLeast => ">=",
            Self::Exact => "=",
            Self::Greater => ">",
        };
        write!(f, "{s}")
    }
}

/// A 0-1 feasibility problem over (vertex, color) variables.
///
/// Variable ids are `vertex * num_colors + color`; when a slack color is
/// present it has color index `rho + 1`.
#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityProblem {
    num_vars: u32,
    num_vertices: u32,
    num_colors: u32,
    rho: u32,
    mode: LpMode,
    /// True when every vertex carries an exactly-one-color constraint, which
    /// lets the search branch on whole vertex colors.
    partitioned: bool,
    constraints: Vec<LinearConstraint>,
    anchors: Vec<(u32, bool)>,
}

impl FeasibilityProblem {
    /// Assembles a problem from raw parts; mostly useful for tests and
    /// differential checks against the brute-force path.
    pub fn from_parts(
        num_vars: u32,
        constraints: Vec<LinearConstraint>,
        anchors: Vec<(u32, bool)>,
    ) -> Result<Self, BuildError> {
        for (i, &(var, value)) in anchors.iter().enumerate() {
            for &(other, other_value) in &anchors[..i] {
                if var == other && value != other_value {
                    return Err(BuildError::ConflictingAnchors { var });
                }
            }
        }
        Ok(Self {
            num_vars,
            num_vertices: num_vars,
            num_colors: 1,
            rho: 0,
            mode: LpMode::Full,
            partitioned: false,
            constraints,
            anchors,
        })
    }

    /// A vertex-coloring problem on an arbitrary graph: `num_colors`
    /// variables per vertex, with the exactly-one-color constraints (and
    /// whatever else) supplied in `constraints`. The solver branches on
    /// whole vertex colors, which is what makes these tractable.
    pub fn coloring(
        num_vertices: u32,
        num_colors: u32,
        constraints: Vec<LinearConstraint>,
        anchors: Vec<(u32, bool)>,
    ) -> Result<Self, BuildError> {
        let mut problem = Self::from_parts(num_vertices * num_colors, constraints, anchors)?;
        problem.num_vertices = num_vertices;
        problem.num_colors = num_colors;
        problem.rho = num_colors.saturating_sub(1);
        problem.partitioned = true;
        Ok(problem)
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }

    pub fn mode(&self) -> LpMode {
        self.mode
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn anchors(&self) -> &[(u32, bool)] {
        &self.anchors
    }

    pub fn var(&self, vertex: u32, color: u32) -> u32 {
        vertex * self.num_colors + color
    }

    pub fn vertex_color(&self, var: u32) -> (u32, u32) {
        (var / self.num_colors, var % self.num_colors)
    }

    /// FNV-1a hash of the full problem encoding; reports cite it so every
    /// exclusion is reproducible.
    pub fn hash64(&self) -> u64 {
        let mut h = Fnv::new();
        h.write_u32(self.num_vars);
        h.write_u32(self.num_colors);
        h.write_u32(self.rho);
        h.write_u32(match self.mode {
            LpMode::Full => 0,
            LpMode::AtLeast => 1,
            LpMode::Exact => 2,
            LpMode::Greater => 3,
        });
        for c in &self.constraints {
            h.write_u32(match c.relation {
                Relation::Eq => 0,
                Relation::Le => 1,
                Relation::Ge => 2,
            });
            h.write_i32(c.bound);
            for &(var, coeff) in &c.terms {
                h.write_u32(var);
                h.write_i32(coeff);
            }
            h.write_u32(u32::MAX);
        }
        for &(var, value) in &self.anchors {
            h.write_u32(var);
            h.write_u32(u32::from(value));
        }
        h.finish()
    }
}

struct Fnv(u64);

impl Fnv {
    fn new() -> Self {
        Self(0xcbf2_9ce4_8422_2325)
    }

    fn write_u8(&mut self, byte: u8) {
        self.0 ^= u64::from(byte);
        self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
    }

    fn write_u32(&mut self, value: u32) {
        for b in value.to_le_bytes() {
            self.write_u8(b);
        }
    }

    fn write_i32(&mut self, value: i32) {
        self.write_u32(value as u32);
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

/// A 0/1 value per variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub values: Vec<bool>,
}

/// Search effort counters; `elapsed` is zero when no clock is available.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub propagations: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Outcome of a solve. `Infeasible` is a completed exhaustive search;
/// `Timeout` means the budget ran out first and proves nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Feasible(Assignment, SolveStats),
    Infeasible(SolveStats),
    Timeout(SolveStats),
}

impl SolveResult {
    pub fn stats(&self) -> &SolveStats {
        match self {
            Self::Feasible(_, s) | Self::Infeasible(s) | Self::Timeout(s) => s,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible(..))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Self::Infeasible(..))
    }
}

/// Node and wall-clock limits for one solve. Wall-clock limits take effect
/// only when a clock is available (the `std` feature).
#[derive(Debug, Clone, Default)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Self { node_limit: Some(limit), time_limit: None }
    }
}

fn column_terms_full(matrix: &ParamMatrix, j: usize) -> Vec<(usize, u32)> {
    matrix.column(j)
}

fn push_balance_constraints(
    constraints: &mut Vec<LinearConstraint>,
    ball: &BallGraph,
    num_colors: u32,
    columns: &[Vec<(usize, u32)>],
) {
    for v in 0..ball.vertex_count() as u32 {
        let interior = ball.interior()[v as usize];
        for (j, column) in columns.iter().enumerate() {
            let mut terms = Vec::with_capacity(ball.degree(v) + column.len());
            for &u in &ball.adjacency()[v as usize] {
                terms.push((u * num_colors + j as u32, 1));
            }
            for &(i, value) in column {
                terms.push((v * num_colors + i as u32, -(value as i32)));
            }
            constraints.push(LinearConstraint {
                terms,
                relation: if interior { Relation::Eq } else { Relation::Le },
                bound: 0,
            });
        }
    }
}

fn push_partition_constraints(
    constraints: &mut Vec<LinearConstraint>,
    num_vertices: u32,
    num_colors: u32,
) {
    for v in 0..num_vertices {
        let terms = (0..num_colors).map(|c| (v * num_colors + c, 1)).collect();
        constraints.push(LinearConstraint { terms, relation: Relation::Eq, bound: 1 });
    }
}

/// The full-matrix coloring problem: colors `0..=rho`, interior equalities,
/// boundary inequalities, the center anchored in the code.
pub fn build_lp_full(
    ball: &BallGraph,
    matrix: &ParamMatrix,
) -> Result<FeasibilityProblem, BuildError> {
    if matrix.valency() != ball.valency() {
        return Err(BuildError::ValencyMismatch { matrix: matrix.valency(), ball: ball.valency() });
    }
    let rho = matrix.rho() as u32;
    let num_colors = rho + 1;
    let num_vertices = ball.vertex_count() as u32;
    let num_vars = num_vertices * num_colors;
    let mut constraints = Vec::new();
    push_partition_constraints(&mut constraints, num_vertices, num_colors);
    let columns: Vec<Vec<(usize, u32)>> =
        (0..=rho as usize).map(|j| column_terms_full(matrix, j)).collect();
    push_balance_constraints(&mut constraints, ball, num_colors, &columns);
    Ok(FeasibilityProblem {
        num_vars,
        num_vertices,
        num_colors,
        rho,
        mode: LpMode::Full,
        partitioned: true,
        constraints,
        anchors: vec![(0, true)],
    })
}

/// The partial-matrix problems: colors `0..=rho` plus the slack color `F`
/// at index `rho + 1`; equations only for the columns of `B`; the slack
/// cardinality is free (`>=`), zero (`=`), or positive (`>`).
pub fn build_lp_partial(
    ball: &BallGraph,
    partial: &PartialMatrix,
    mode: LpMode,
) -> Result<FeasibilityProblem, BuildError> {
    if partial.valency() != ball.valency() {
        return Err(BuildError::ValencyMismatch {
            matrix: partial.valency(),
            ball: ball.valency(),
        });
    }
    if mode == LpMode::Full {
        return Err(BuildError::BadMode);
    }
    let rho = partial.rho() as u32;
    let num_colors = rho + 2;
    let num_vertices = ball.vertex_count() as u32;
    let num_vars = num_vertices * num_colors;
    let mut constraints = Vec::new();
    push_partition_constraints(&mut constraints, num_vertices, num_colors);
    let columns: Vec<Vec<(usize, u32)>> =
        (0..rho as usize).map(|j| partial.column(j)).collect();
    push_balance_constraints(&mut constraints, ball, num_colors, &columns);
    // Slack cardinality by mode.
    let slack = rho + 1;
    let terms: Vec<(u32, i32)> =
        (0..num_vertices).map(|v| (v * num_colors + slack, 1)).collect();
    let (relation, bound) = match mode {
        LpMode::AtLeast => (Relation::Ge, 0),
        LpMode::Exact => (Relation::Eq, 0),
        LpMode::Greater => (Relation::Ge, 1),
        LpMode::Full => unreachable!(),
    };
    constraints.push(LinearConstraint { terms, relation, bound });
    Ok(FeasibilityProblem {
        num_vars,
        num_vertices,
        num_colors,
        rho,
        mode,
        partitioned: true,
        constraints,
        anchors: vec![(0, true)],
    })
}

/// Checks an assignment against every constraint and anchor.
pub fn verify_assignment(problem: &FeasibilityProblem, assignment: &Assignment) -> bool {
    if assignment.values.len() != problem.num_vars as usize {
        return false;
    }
    if !problem
        .anchors
        .iter()
        .all(|&(var, value)| assignment.values[var as usize] == value)
    {
        return false;
    }
    problem.constraints.iter().all(|c| c.satisfied_by(&assignment.values))
}

/// Builds the assignment induced by per-vertex distance labels: color
/// `label` when it fits, the slack color otherwise. Labels beyond the
/// available colors in a slack-free problem leave the vertex uncolored, so
/// verification fails instead of misattributing it.
pub fn assignment_from_labels(problem: &FeasibilityProblem, labels: &[u32]) -> Assignment {
    assert_eq!(labels.len(), problem.num_vertices as usize);
    let mut values = vec![false; problem.num_vars as usize];
    let has_slack = problem.mode != LpMode::Full;
    for (v, &label) in labels.iter().enumerate() {
        let color = if label <= problem.rho {
            Some(label)
        } else if has_slack {
            Some(problem.rho + 1)
        } else {
            None
        };
        if let Some(c) = color {
            values[problem.var(v as u32, c) as usize] = true;
        }
    }
    Assignment { values }
}

const UNASSIGNED: i8 = -1;
const BIG: i32 = 1 << 28;

struct Searcher<'p> {
    problem: &'p FeasibilityProblem,
    values: Vec<i8>,
    // Per-constraint running state: assigned sum and the positive/negative
    // slack still available from unassigned variables.
    sum: Vec<i32>,
    pos: Vec<i32>,
    neg: Vec<i32>,
    lo: Vec<i32>,
    hi: Vec<i32>,
    watches: Vec<Vec<(u32, i32)>>,
    dirty: Vec<u32>,
    in_dirty: Vec<bool>,
    trail: Vec<u32>,
    stats: SolveStats,
}

enum Search {
    Sat,
    Unsat,
    Out,
}

impl<'p> Searcher<'p> {
    fn new(problem: &'p FeasibilityProblem) -> Self {
        let n = problem.num_vars as usize;
        let m = problem.constraints.len();
        let mut watches = vec![Vec::new(); n];
        let mut pos = vec![0i32; m];
        let mut neg = vec![0i32; m];
        let mut lo = vec![-BIG; m];
        let mut hi = vec![BIG; m];
        for (cid, c) in problem.constraints.iter().enumerate() {
            for &(var, coeff) in &c.terms {
                watches[var as usize].push((cid as u32, coeff));
                if coeff > 0 {
                    pos[cid] += coeff;
                } else {
                    neg[cid] += coeff;
                }
            }
            match c.relation {
                Relation::Eq => {
                    lo[cid] = c.bound;
                    hi[cid] = c.bound;
                }
                Relation::Le => hi[cid] = c.bound,
                Relation::Ge => lo[cid] = c.bound,
            }
        }
        Self {
            problem,
            values: vec![UNASSIGNED; n],
            sum: vec![0; m],
            pos,
            neg,
            lo,
            hi,
            watches,
            dirty: Vec::new(),
            in_dirty: vec![false; m],
            trail: Vec::new(),
            stats: SolveStats::default(),
        }
    }

    fn assign(&mut self, var: u32, value: i8) {
        debug_assert_eq!(self.values[var as usize], UNASSIGNED);
        self.values[var as usize] = value;
        self.trail.push(var);
        self.stats.propagations += 1;
        for wi in 0..self.watches[var as usize].len() {
            let (cid, coeff) = self.watches[var as usize][wi];
            let cid = cid as usize;
            if coeff > 0 {
                self.pos[cid] -= coeff;
            } else {
                self.neg[cid] -= coeff;
            }
            if value == 1 {
                self.sum[cid] += coeff;
            }
            if !self.in_dirty[cid] {
                self.in_dirty[cid] = true;
                self.dirty.push(cid as u32);
            }
        }
    }

    fn unassign(&mut self, var: u32) {
        let value = self.values[var as usize];
        self.values[var as usize] = UNASSIGNED;
        for wi in 0..self.watches[var as usize].len() {
            let (cid, coeff) = self.watches[var as usize][wi];
            let cid = cid as usize;
            if coeff > 0 {
                self.pos[cid] += coeff;
            } else {
                self.neg[cid] += coeff;
            }
            if value == 1 {
                self.sum[cid] -= coeff;
            }
        }
    }

    fn backtrack_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let var = self.trail.pop().expect("trail nonempty");
            self.unassign(var);
        }
        for &cid in &self.dirty {
            self.in_dirty[cid as usize] = false;
        }
        self.dirty.clear();
    }

    /// Processes dirty constraints to a fixpoint: detects violated bounds and
    /// assigns every variable whose value is forced. Returns false on conflict.
    fn propagate(&mut self) -> bool {
        while let Some(cid) = self.dirty.pop() {
            self.in_dirty[cid as usize] = false;
            if !self.process(cid as usize) {
                // Leave remaining dirty flags; backtrack_to clears them.
                for &other in &self.dirty {
                    self.in_dirty[other as usize] = false;
                }
                self.dirty.clear();
                return false;
            }
        }
        true
    }

    fn process(&mut self, cid: usize) -> bool {
        loop {
            let min = self.sum[cid] + self.neg[cid];
            let max = self.sum[cid] + self.pos[cid];
            if min > self.hi[cid] || max < self.lo[cid] {
                return false;
            }
            if min >= self.lo[cid] && max <= self.hi[cid] {
                return true; // satisfied whatever happens
            }
            let mut forced: Option<(u32, i8)> = None;
            let terms = &self.problem.constraints[cid].terms;
            for &(var, coeff) in terms {
                if self.values[var as usize] != UNASSIGNED {
                    continue;
                }
                let (to_zero, to_one) = if coeff > 0 {
                    (max - coeff < self.lo[cid], min + coeff > self.hi[cid])
                } else {
                    (min - coeff > self.hi[cid], max + coeff < self.lo[cid])
                };
                if to_one && to_zero {
                    return false;
                }
                if to_one {
                    forced = Some((var, 0));
                    break;
                }
                if to_zero {
                    forced = Some((var, 1));
                    break;
                }
            }
            // `to_one` above means assigning 1 breaks the constraint, so the
            // variable is forced to 0, and symmetrically.
            match forced {
                Some((var, value)) => self.assign(var, value),
                None => return true,
            }
        }
    }

    fn next_vertex(&self, from: u32) -> Option<u32> {
        let colors = self.problem.num_colors;
        (from..self.problem.num_vertices).find(|&v| {
            let base = (v * colors) as usize;
            !self.values[base..base + colors as usize].contains(&1)
        })
    }

    fn out_of_budget(&self, budget: &Budget, #[allow(unused)] start: ClockStart) -> bool {
        if let Some(limit) = budget.node_limit {
            if self.stats.nodes >= limit {
                return true;
            }
        }
        #[cfg(feature = "std")]
        if let Some(limit) = budget.time_limit {
            if self.stats.nodes % 512 == 0 && start.0.elapsed() >= limit {
                return true;
            }
        }
        false
    }

    fn search(&mut self, from: u32, budget: &Budget, start: ClockStart) -> Search {
        if !self.problem.partitioned {
            return self.search_generic(from, budget, start);
        }
        let Some(vertex) = self.next_vertex(from) else {
            debug_assert!(!self.values.contains(&UNASSIGNED));
            return Search::Sat;
        };
        for color in 0..self.problem.num_colors {
            let var = self.problem.var(vertex, color);
            if self.values[var as usize] != UNASSIGNED {
                continue;
            }
            self.stats.nodes += 1;
            if self.out_of_budget(budget, start) {
                return Search::Out;
            }
            let mark = self.trail.len();
            self.assign(var, 1);
            if self.propagate() {
                match self.search(vertex, budget, start) {
                    Search::Sat => return Search::Sat,
                    Search::Out => return Search::Out,
                    Search::Unsat => {}
                }
            }
            self.backtrack_to(mark);
        }
        Search::Unsat
    }

    /// Plain two-way branching for problems without partition structure.
    fn search_generic(&mut self, from: u32, budget: &Budget, start: ClockStart) -> Search {
        let Some(var) = (from..self.problem.num_vars)
            .find(|&v| self.values[v as usize] == UNASSIGNED)
        else {
            return Search::Sat;
        };
        for value in [0i8, 1] {
            self.stats.nodes += 1;
            if self.out_of_budget(budget, start) {
                return Search::Out;
            }
            let mark = self.trail.len();
            self.assign(var, value);
            if self.propagate() {
                match self.search_generic(var, budget, start) {
                    Search::Sat => return Search::Sat,
                    Search::Out => return Search::Out,
                    Search::Unsat => {}
                }
            }
            self.backtrack_to(mark);
        }
        Search::Unsat
    }
}

#[derive(Copy, Clone)]
struct ClockStart(#[cfg(feature = "std")] std::time::Instant);

impl ClockStart {
    fn now() -> Self {
        Self(
            #[cfg(feature = "std")]
            std::time::Instant::now(),
        )
    }

    fn elapsed(&self) -> Duration {
        #[cfg(feature = "std")]
        {
            self.0.elapsed()
        }
        #[cfg(not(feature = "std"))]
        {
            Duration::ZERO
        }
    }
}

/// Complete depth-first search with constraint propagation. Branches on the
/// lowest-index uncolored vertex, colors in ascending index order; fully
/// deterministic for a fixed problem.
pub fn solve(problem: &FeasibilityProblem, budget: &Budget) -> SolveResult {
    let start = ClockStart::now();
    let mut searcher = Searcher::new(problem);

    // Seed anchors and reach the root fixpoint.
    for cid in 0..problem.constraints.len() as u32 {
        searcher.in_dirty[cid as usize] = true;
        searcher.dirty.push(cid);
    }
    let mut conflict = false;
    for &(var, value) in &problem.anchors {
        let value = i8::from(value);
        match searcher.values[var as usize] {
            UNASSIGNED => searcher.assign(var, value),
            v if v == value => {}
            _ => {
                conflict = true;
                break;
            }
        }
    }
    let feasible_root = !conflict && searcher.propagate();

    let outcome = if !feasible_root {
        Search::Unsat
    } else {
        searcher.search(0, budget, start)
    };
    let mut stats = searcher.stats.clone();
    stats.elapsed = start.elapsed();
    match outcome {
        Search::Sat => {
            let values = searcher.values.iter().map(|&v| v == 1).collect();
            let assignment = Assignment { values };
            debug_assert!(verify_assignment(problem, &assignment));
            SolveResult::Feasible(assignment, stats)
        }
        Search::Unsat => SolveResult::Infeasible(stats),
        Search::Out => SolveResult::Timeout(stats),
    }
}

/// Maximum problem size [`brute_force`] accepts.
pub const BRUTE_FORCE_MAX_VARS: u32 = 24;

/// Exhaustive enumeration of all assignments, for cross-validating the
/// solver on tiny problems.
pub fn brute_force(problem: &FeasibilityProblem) -> Result<SolveResult, BuildError> {
    let n = problem.num_vars;
    if n > BRUTE_FORCE_MAX_VARS {
        return Err(BuildError::BruteForceTooLarge { vars: n, max: BRUTE_FORCE_MAX_VARS });
    }
    let start = ClockStart::now();
    let mut stats = SolveStats::default();
    for mask in 0u64..(1u64 << n) {
        stats.nodes += 1;
        let values: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let assignment = Assignment { values };
        if verify_assignment(problem, &assignment) {
            stats.elapsed = start.elapsed();
            return Ok(SolveResult::Feasible(assignment, stats));
        }
    }
    stats.elapsed = start.elapsed();
    Ok(SolveResult::Infeasible(stats))
}

/// Linear pseudo-Boolean text: one constraint per line, `coeff xN` terms,
/// relations `=`, `>=`, `<=`, each line terminated by `;`. Anchors are
/// emitted as unit equations. Variables are `x1..xN`.
pub fn export_opb(problem: &FeasibilityProblem) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "* #variable= {} #constraint= {}\n",
        problem.num_vars,
        problem.constraints.len() + problem.anchors.len()
    ));
    out.push_str(&format!(
        "* mode= {} rho= {} vertices= {} colors= {}\n",
        problem.mode, problem.rho, problem.num_vertices, problem.num_colors
    ));
    for &(var, value) in &problem.anchors {
        out.push_str(&format!("1 x{} = {};\n", var + 1, i32::from(value)));
    }
    for c in &problem.constraints {
        let mut line = String::new();
        for (i, &(var, coeff)) in c.terms.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(&format!("{coeff} x{}", var + 1));
        }
        line.push_str(&format!(" {} {};\n", c.relation.token(), c.bound));
        out.push_str(&line);
    }
    out
}

/// Parses the subset of OPB emitted by [`export_opb`]; returns the variable
/// count and the constraint list (anchors come back as unit constraints).
pub fn parse_opb(text: &str) -> Result<(u32, Vec<LinearConstraint>), BuildError> {
    let mut num_vars = 0u32;
    let mut constraints = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('*') {
            continue;
        }
        let body = line.strip_suffix(';').map(str::trim).ok_or(BuildError::OpbParse {
            line: lineno + 1,
            message: String::from("missing terminating ';'"),
        })?;
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() < 2 {
            return Err(BuildError::OpbParse { line: lineno + 1, message: String::from("too short") });
        }
        let relation = match tokens[tokens.len() - 2] {
            "=" => Relation::Eq,
            "<=" => Relation::Le,
            ">=" => Relation::Ge,
            other => {
                return Err(BuildError::OpbParse {
                    line: lineno + 1,
                    message: format!("unknown relation {other:?}"),
                })
            }
        };
        let bound: i32 = tokens[tokens.len() - 1].parse().map_err(|_| BuildError::OpbParse {
            line: lineno + 1,
            message: format!("bad bound {:?}", tokens[tokens.len() - 1]),
        })?;
        let term_tokens = &tokens[..tokens.len() - 2];
        if term_tokens.len() % 2 != 0 {
            return Err(BuildError::OpbParse {
                line: lineno + 1,
                message: String::from("dangling coefficient"),
            });
        }
        let mut terms = Vec::with_capacity(term_tokens.len() / 2);
        for pair in term_tokens.chunks_exact(2) {
            let coeff: i32 = pair[0].parse().map_err(|_| BuildError::OpbParse {
                line: lineno + 1,
                message: format!("bad coefficient {:?}", pair[0]),
            })?;
            let var: u32 = pair[1]
                .strip_prefix('x')
                .and_then(|v| v.parse::<u32>().ok())
                .filter(|&v| v >= 1)
                .ok_or(BuildError::OpbParse {
                    line: lineno + 1,
                    message: format!("bad variable {:?}", pair[1]),
                })?;
            num_vars = num_vars.max(var);
            terms.push((var - 1, coeff));
        }
        constraints.push(LinearConstraint { terms, relation, bound });
    }
    Ok((num_vars, constraints))
}
