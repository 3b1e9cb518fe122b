//! Command-line surface for the grid CRC toolkit.
//!
//! Exit codes: 0 = completed with consistent results, 1 = usage or input
//! error, 2 = contradiction between a claimed and a verified matrix,
//! 3 = a classification or solve run hit its budget.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use gridcrc_core::classify::{
    classify_g3_1null, classify_g4_2null, classify_rho1, ClassificationReport,
};
use gridcrc_core::codes::{
    parse_compact, parse_partial, verify_periodic, ParamMatrix, PeriodicCode, Verdict,
};
use gridcrc_core::constructions::{self, TriangularCode};
use gridcrc_core::feasibility::{
    build_lp_full, build_lp_partial, export_opb, solve, Budget, FeasibilityProblem, LpMode,
    SolveResult,
};
use gridcrc_core::lattice::{ball_graph, BallGraph};

/// Completely regular codes in the n-dimensional rectangular grid:
/// constructions, verification, ball feasibility, and classification.
#[derive(Parser)]
#[command(name = "gridcrc", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a code from the construction catalog and verify its matrix.
    Construct(ConstructArgs),
    /// Verify complete regularity of a periodic code file.
    Verify(VerifyArgs),
    /// Solve one ball feasibility problem for a full or partial matrix.
    Solve(SolveArgs),
    /// Run a classification driver and emit its report.
    Classify(ClassifyArgs),
    /// Export a ball feasibility problem in OPB form.
    ExportOpb(ExportArgs),
    /// Write a ball subgraph as JSON (debugging format).
    Ball(BallArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// One of: perfect, halved-perfect, distance, distance-anticode,
    /// all-ones, diameter-lattice, diameter-union, multiply, quotient,
    /// ternary-hamming, binary-hamming, triangular.
    kind: String,
    /// Ambient dimension.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Quotient period (quotient kind).
    #[arg(long)]
    q: Option<u32>,
    /// Number of cosets (diameter-union kind).
    #[arg(long)]
    t: Option<u32>,
    /// Multiplication factor (multiply kind).
    #[arg(long)]
    k: Option<usize>,
    /// Named source: g1-perfect, g1-4z, ... for multiply; singleton, pair,
    /// shortened-perfect, doubled-perfect-h32, doubled-singleton-h32 for
    /// binary-hamming; singleton, repetition for ternary-hamming.
    #[arg(long)]
    source: Option<String>,
    /// JSON file with source data (residue or word lists; for triangular a
    /// {q, residues} object; for multiply a PeriodicCode).
    #[arg(long)]
    source_file: Option<PathBuf>,
    /// Expected matrix in compact form; overrides the built-in claim.
    #[arg(long)]
    expect: Option<String>,
    /// Write the PeriodicCode JSON here.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// PeriodicCode JSON file: {n, periods, residues}.
    code: PathBuf,
    /// Expected matrix in compact form.
    #[arg(long)]
    expect: Option<String>,
    /// Emit the full verdict as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    radius: u32,
    /// Full matrix in compact form, e.g. "[0,6|1,5]".
    #[arg(long, conflicts_with = "partial")]
    matrix: Option<String>,
    /// Partial matrix in rectangular form, e.g. "[0,6|2,0|0,3]".
    #[arg(long)]
    partial: Option<String>,
    /// Problem mode for partial matrices.
    #[arg(long, value_enum, default_value_t = ModeArg::Ge)]
    mode: ModeArg,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Emit the result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// One of: rho1, g3-1null, g4-2null.
    scope: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    radius: u32,
    /// c2 values for g4-2null, e.g. --c2 4,5,6.
    #[arg(long, value_delimiter = ',')]
    c2: Vec<u32>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Write the JSON report here.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    radius: u32,
    #[arg(long, conflicts_with = "partial")]
    matrix: Option<String>,
    #[arg(long)]
    partial: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Ge)]
    mode: ModeArg,
    /// Output path for the OPB text.
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args)]
struct BallArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    radius: u32,
    /// Output path; stdout when absent.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node limit per solve.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock limit per solve in seconds; GRIDCRC_BUDGET_SECS sets the
    /// default.
    #[arg(long)]
    time_limit_secs: Option<u64>,
}

impl BudgetArgs {
    fn to_budget(&self) -> Budget {
        let env_secs = std::env::var("GRIDCRC_BUDGET_SECS")
            .ok()
            .and_then(|v| v.parse::<u64>().ok());
        Budget {
            node_limit: self.node_limit,
            time_limit: self.time_limit_secs.or(env_secs).map(Duration::from_secs),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Ge,
    Eq,
    Gt,
}

impl ModeArg {
    fn to_mode(self) -> LpMode {
        match self {
            Self::Full => LpMode::Full,
            Self::Ge => LpMode::AtLeast,
            Self::Eq => LpMode::Exact,
            Self::Gt => LpMode::Greater,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Classify(args) => cmd_classify(args),
        Command::ExportOpb(args) => cmd_export_opb(args),
        Command::Ball(args) => cmd_ball(args),
    }
}

fn load_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn word_set(words: Vec<Vec<i64>>) -> BTreeSet<Vec<i64>> {
    words.into_iter().collect()
}

fn named_binary_source(name: &str, n: usize) -> Result<BTreeSet<Vec<i64>>> {
    Ok(match (name, n) {
        ("singleton", _) => word_set(vec![vec![0; 2 * n]]),
        ("pair", _) => word_set(vec![vec![0; 2 * n], vec![1; 2 * n]]),
        ("shortened-perfect", 3) => constructions::h62_shortened_perfect(),
        ("doubled-perfect-h32", 3) => {
            constructions::binary_block_preimage(&constructions::h32_perfect(), 2)
        }
        ("doubled-singleton-h32", 3) => {
            constructions::binary_block_preimage(&word_set(vec![vec![0, 0, 0]]), 2)
        }
        _ => bail!("unknown binary source {name:?} for n = {n}"),
    })
}

fn named_ternary_source(name: &str, n: usize) -> Result<Vec<Vec<i64>>> {
    Ok(match (name, n) {
        ("singleton", _) => vec![vec![0; n]],
        ("repetition", _) => (0..3i64).map(|v| vec![v; n]).collect(),
        _ => bail!("unknown ternary source {name:?}"),
    })
}

fn named_code_source(name: &str) -> Result<PeriodicCode> {
    if let Some(m) = name.strip_prefix('g').and_then(|rest| {
        let (m, tail) = rest.split_once('-')?;
        let m: usize = m.parse().ok()?;
        Some((m, tail.to_string()))
    }) {
        let (m, tail) = m;
        if tail == "perfect" {
            return Ok(constructions::golomb_welch_perfect(m));
        }
        if let Some(q) = tail.strip_suffix('z').and_then(|q| q.parse::<u32>().ok()) {
            if m == 1 {
                return Ok(constructions::from_quotient(1, q, [vec![0]])?);
            }
        }
    }
    bail!("unknown code source {name:?} (try g1-perfect, g1-4z, or --source-file)")
}

fn cmd_construct(args: ConstructArgs) -> Result<ExitCode> {
    let n = args.n;
    let (code, claimed): (PeriodicCode, Option<ParamMatrix>) = match args.kind.as_str() {
        "perfect" => (
            constructions::golomb_welch_perfect(n),
            Some(constructions::perfect_matrix(n)),
        ),
        "halved-perfect" => (
            constructions::halved_perfect(n),
            Some(constructions::halved_matrix(n)),
        ),
        "distance" => (
            constructions::distance_code(n),
            Some(constructions::distance_matrix(n)),
        ),
        "distance-anticode" => (
            constructions::distance_anticode(n),
            Some(constructions::anticode_matrix(n)),
        ),
        "all-ones" => (
            constructions::all_ones_code(n),
            Some(constructions::all_ones_matrix(n)),
        ),
        "diameter-lattice" => (
            constructions::diameter_lattice(n)?,
            Some(constructions::diameter_union_matrix(n, 1)),
        ),
        "diameter-union" => {
            let t = args.t.ok_or_else(|| anyhow!("diameter-union needs --t"))?;
            (
                constructions::diameter_union(n, t)?,
                Some(constructions::diameter_union_matrix(n, t)),
            )
        }
        "multiply" => {
            let k = args.k.ok_or_else(|| anyhow!("multiply needs --k"))?;
            let source = match (&args.source, &args.source_file) {
                (Some(name), None) => named_code_source(name)?,
                (None, Some(path)) => load_json(path)?,
                _ => bail!("multiply needs exactly one of --source / --source-file"),
            };
            (constructions::multiply(&source, k), None)
        }
        "quotient" => {
            let q = args.q.ok_or_else(|| anyhow!("quotient needs --q"))?;
            let path = args
                .source_file
                .as_ref()
                .ok_or_else(|| anyhow!("quotient needs --source-file with a residue list"))?;
            let residues: Vec<Vec<i64>> = load_json(path)?;
            (constructions::from_quotient(n, q, residues)?, None)
        }
        "ternary-hamming" => {
            let words = match (&args.source, &args.source_file) {
                (Some(name), None) => named_ternary_source(name, n)?,
                (None, Some(path)) => load_json(path)?,
                _ => bail!("ternary-hamming needs exactly one of --source / --source-file"),
            };
            (constructions::from_ternary_hamming(n, words)?, None)
        }
        "binary-hamming" => {
            let words = match (&args.source, &args.source_file) {
                (Some(name), None) => named_binary_source(name, n)?,
                (None, Some(path)) => word_set(load_json(path)?),
                _ => bail!("binary-hamming needs exactly one of --source / --source-file"),
            };
            (constructions::from_binary_hamming(n, &words)?, None)
        }
        "triangular" => {
            let path = args
                .source_file
                .as_ref()
                .ok_or_else(|| anyhow!("triangular needs --source-file with {{q, residues}}"))?;
            let tri: TriangularCode = load_json(path)?;
            (constructions::from_triangular(&tri), None)
        }
        other => bail!("unknown construction kind {other:?}"),
    };

    let expected = match &args.expect {
        Some(text) => Some(parse_compact(text)?),
        None => claimed,
    };
    let verdict = verify_periodic(&code, expected.as_ref())?;
    if let Some(out) = &args.out {
        fs::write(out, serde_json::to_string_pretty(&code)?)
            .with_context(|| format!("writing {}", out.display()))?;
    }
    report_verdict(&verdict, expected.as_ref())
}

fn report_verdict(verdict: &Verdict, expected: Option<&ParamMatrix>) -> Result<ExitCode> {
    match (&verdict.matrix, verdict.is_crc) {
        (Some(matrix), true) => println!("{matrix}"),
        _ => println!(
            "not completely regular (covering radius {}): {:?}",
            verdict.covering_radius, verdict.failure
        ),
    }
    if let Some(expected) = expected {
        if verdict.matches_expected == Some(true) {
            Ok(ExitCode::SUCCESS)
        } else {
            eprintln!(
                "contradiction: expected {expected}, verified {}",
                verdict
                    .matrix
                    .as_ref()
                    .map_or_else(|| String::from("(not a CRC)"), ToString::to_string)
            );
            Ok(ExitCode::from(2))
        }
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let code: PeriodicCode = load_json(&args.code)?;
    let expected = args.expect.as_deref().map(parse_compact).transpose()?;
    let verdict = verify_periodic(&code, expected.as_ref())?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&verdict)?);
        if expected.is_some() && verdict.matches_expected != Some(true) {
            return Ok(ExitCode::from(2));
        }
        return Ok(ExitCode::SUCCESS);
    }
    report_verdict(&verdict, expected.as_ref())
}

fn build_problem(
    n: usize,
    radius: u32,
    matrix: Option<&str>,
    partial: Option<&str>,
    mode: LpMode,
) -> Result<(BallGraph, FeasibilityProblem)> {
    let ball = ball_graph(n, radius);
    let problem = match (matrix, partial) {
        (Some(text), None) => build_lp_full(&ball, &parse_compact(text)?)?,
        (None, Some(text)) => {
            let block = parse_partial(text, 2 * n as u32)?;
            if mode == LpMode::Full {
                bail!("partial matrices need --mode ge, eq, or gt");
            }
            build_lp_partial(&ball, &block, mode)?
        }
        _ => bail!("need exactly one of --matrix / --partial"),
    };
    Ok((ball, problem))
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let mode = args.mode.to_mode();
    let (_, problem) =
        build_problem(args.n, args.radius, args.matrix.as_deref(), args.partial.as_deref(), mode)?;
    let budget = args.budget.to_budget();
    let result = solve(&problem, &budget);
    let (status, exit) = match &result {
        SolveResult::Feasible(..) => ("feasible", ExitCode::SUCCESS),
        SolveResult::Infeasible(_) => ("infeasible", ExitCode::SUCCESS),
        SolveResult::Timeout(_) => ("timeout", ExitCode::from(3)),
    };
    let stats = result.stats();
    if args.json {
        let payload = serde_json::json!({
            "status": status,
            "vars": problem.num_vars(),
            "constraints": problem.constraints().len(),
            "nodes": stats.nodes,
            "propagations": stats.propagations,
            "elapsed_ms": stats.elapsed.as_millis() as u64,
            "problem_hash": format!("{:016x}", problem.hash64()),
        });
        println!("{}", serde_json::to_string_pretty(&payload)?);
    } else {
        println!(
            "{status} ({} vars, {} constraints, {} nodes, {} propagations, {:?})",
            problem.num_vars(),
            problem.constraints().len(),
            stats.nodes,
            stats.propagations,
            stats.elapsed
        );
    }
    Ok(exit)
}

fn render_report(report: &ClassificationReport, format: FormatArg, elapsed_ms: u64) -> Result<String> {
    match format {
        FormatArg::Json => {
            let timestamp = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            let payload = serde_json::json!({
                "run": { "timestamp": timestamp, "elapsed_ms": elapsed_ms },
                "report": report,
            });
            Ok(serde_json::to_string_pretty(&payload)?)
        }
        FormatArg::Table => {
            let mut out = String::new();
            out.push_str(&format!(
                "scope {} (n = {}, radius {}, {} candidates{})\n",
                report.scope,
                report.n,
                report.radius,
                report.candidates.len(),
                if report.has_timeout { ", TIMEOUTS PRESENT" } else { "" }
            ));
            out.push_str(&format!("{:55} {}\n", "parameters", "provenance"));
            for row in &report.table {
                out.push_str(&format!("{:55} {}\n", row.parameters, row.provenance));
            }
            Ok(out)
        }
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode> {
    let budget = args.budget.to_budget();
    let start = Instant::now();
    let report = match args.scope.as_str() {
        "rho1" => classify_rho1(args.n, args.radius, &budget),
        "g3-1null" => classify_g3_1null(args.radius, &budget),
        "g4-2null" => {
            let c2: Vec<u32> =
                if args.c2.is_empty() { vec![2, 3, 4, 5, 6, 7, 8] } else { args.c2.clone() };
            classify_g4_2null(&c2, args.radius, &budget)
        }
        other => bail!("unknown scope {other:?} (try rho1, g3-1null, g4-2null)"),
    }
    .map_err(|e| anyhow!("{e}"))?;
    let elapsed_ms = start.elapsed().as_millis() as u64;

    if let Some(out) = &args.out {
        let json = render_report(&report, FormatArg::Json, elapsed_ms)?;
        fs::write(out, json).with_context(|| format!("writing {}", out.display()))?;
    }
    print!("{}", render_report(&report, args.format, elapsed_ms)?);
    if report.has_timeout {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export_opb(args: ExportArgs) -> Result<ExitCode> {
    let mode = args.mode.to_mode();
    let (_, problem) =
        build_problem(args.n, args.radius, args.matrix.as_deref(), args.partial.as_deref(), mode)?;
    fs::write(&args.out, export_opb(&problem))
        .with_context(|| format!("writing {}", args.out.display()))?;
    eprintln!(
        "wrote {} ({} vars, {} constraints)",
        args.out.display(),
        problem.num_vars(),
        problem.constraints().len() + problem.anchors().len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_ball(args: BallArgs) -> Result<ExitCode> {
    let ball = ball_graph(args.n, args.radius);
    let payload = serde_json::json!({
        "kind": "ball",
        "n": ball.n(),
        "radius": ball.radius(),
        "vertices": ball.vertices(),
        "adjacency": ball.adjacency(),
        "interior": ball.interior(),
    });
    let text = serde_json::to_string(&payload)?;
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
