use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use equicut::harness::{
    run_suite, run_sweep, write_sidecars, write_sweep_csv, ConjectureMatch, Suite, SweepMethod,
    SweepSpec, VerifyRanges,
};
use equicut::io::{
    graph_from_json, graph_to_json, labeling_from_json, read_text, signed_graph_from_json,
    signed_graph_to_json, solve_result_to_json, write_text,
};
use equicut::solver::DEFAULT_ENUMERATION_CAP;
use equicut::{
    is_balanced, is_parity_signed, signature_from_labeling, solve, Error, GraphFamilySpec, Method,
    SolverConfig,
};

const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "equicut",
    version,
    about = "Minimum equicuts and parity signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as JSON.
    Gen(GenArgs),
    /// Compute the minimum equicut of a graph file.
    Solve(SolveArgs),
    /// Solve every C_n^d in a range and write a CSV.
    Sweep(SweepArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Apply a parity labeling to a graph, or inspect a signed graph.
    Label(LabelArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cycle,
    #[value(alias = "cycle_power")]
    CyclePower,
    Circulant,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exhaustive,
    #[value(alias = "branch_and_bound", alias = "bnb")]
    BranchAndBound,
    #[value(alias = "local_search")]
    LocalSearch,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Exhaustive => Method::Exhaustive,
            MethodArg::BranchAndBound => Method::BranchAndBound,
            MethodArg::LocalSearch => Method::LocalSearch,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepMethodArg {
    Auto,
    Exhaustive,
    #[value(alias = "branch_and_bound", alias = "bnb")]
    BranchAndBound,
    #[value(alias = "local_search")]
    LocalSearch,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paper,
    Formulas,
    Solvers,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: Option<usize>,
    /// Comma-separated jump set, e.g. 1,4.
    #[arg(long, value_delimiter = ',')]
    jumps: Vec<usize>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SolverArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "EQUICUT_WORKERS", default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = 100)]
    restarts: usize,
    /// Known upper bound used as the initial incumbent.
    #[arg(long)]
    upper_bound: Option<usize>,
    /// Disable rotation symmetry reduction for circulant inputs.
    #[arg(long)]
    no_symmetry: bool,
    /// Largest order accepted by the exhaustive method (at most 64).
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    #[arg(long)]
    first_improvement: bool,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            symmetry_reduction: !self.no_symmetry,
            restarts: self.restarts,
            rng_seed: self.seed,
            parallelism: self.workers,
            initial_upper_bound: self.upper_bound,
            enumeration_cap: self.cap,
            first_improvement: self.first_improvement,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "exhaustive")]
    method: MethodArg,
    #[command(flatten)]
    solver: SolverArgs,
    /// Also write the result JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Orders, as `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Powers, as `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    d: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    method: SweepMethodArg,
    #[command(flatten)]
    solver: SolverArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// Largest order for the suite's exact checks (suite-specific default).
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, env = "EQUICUT_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct LabelArgs {
    #[arg(long, requires = "labeling", conflicts_with = "signed")]
    graph: Option<PathBuf>,
    #[arg(long)]
    labeling: Option<PathBuf>,
    /// Signed graph JSON to inspect.
    #[arg(long)]
    signed: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

fn emit(text: &str, out: Option<&Path>) -> equicut::Result<()> {
    match out {
        Some(path) => write_text(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(args: &GenArgs) -> equicut::Result<()> {
    let spec = match args.family {
        FamilyArg::Cycle => GraphFamilySpec::cycle(args.n),
        FamilyArg::CyclePower => {
            let d = args
                .d
                .ok_or_else(|| Error::InvalidInput("--d is required for cycle-power".into()))?;
            GraphFamilySpec::cycle_power(args.n, d)
        }
        FamilyArg::Circulant => GraphFamilySpec::circulant(args.n, args.jumps.clone()),
        FamilyArg::Complete => GraphFamilySpec::complete(args.n),
    };
    let g = spec.build()?;
    if spec.collapses_to_complete() {
        eprintln!(
            "note: d = {} >= floor(n/2) = {}, so C_{}^{} is the complete graph K_{}",
            spec.d,
            spec.n / 2,
            spec.n,
            spec.d,
            spec.n
        );
    }
    emit(&graph_to_json(&g), args.out.as_deref())
}

fn cmd_solve(args: &SolveArgs) -> equicut::Result<()> {
    let g = graph_from_json(&read_text(&args.graph)?)?;
    let result = solve(&g, args.method.into(), &args.solver.config())?;
    let text = solve_result_to_json(&result);
    println!("{text}");
    if let Some(out) = &args.out {
        write_text(out, &text)?;
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> equicut::Result<()> {
    let method = match args.method {
        SweepMethodArg::Auto => SweepMethod::Auto,
        SweepMethodArg::Exhaustive => SweepMethod::Fixed(Method::Exhaustive),
        SweepMethodArg::BranchAndBound => SweepMethod::Fixed(Method::BranchAndBound),
        SweepMethodArg::LocalSearch => SweepMethod::Fixed(Method::LocalSearch),
    };
    let cfg = args.solver.config();
    let workers = cfg.parallelism;
    let spec = SweepSpec {
        n_range: args.n.clone(),
        d_range: args.d.clone(),
        method,
        cfg,
    };
    let rows = run_sweep(&spec, workers)?;
    write_sweep_csv(&rows, &args.out)?;
    for path in write_sidecars(&rows, &args.out)? {
        eprintln!("counterexample certificate written to {}", path.display());
    }
    let count = |m: ConjectureMatch| rows.iter().filter(|r| r.conjecture_match == m).count();
    eprintln!(
        "{} instances: {} holds, {} fails, {} unsolved",
        rows.len(),
        count(ConjectureMatch::Holds),
        count(ConjectureMatch::Fails),
        count(ConjectureMatch::Unsolved)
    );
    for row in rows.iter().filter(|r| r.note.is_some()) {
        eprintln!(
            "n={} d={}: {}",
            row.n,
            row.d,
            row.note.as_deref().unwrap_or_default()
        );
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> equicut::Result<bool> {
    let suite = match args.suite {
        SuiteArg::Paper => Suite::Paper,
        SuiteArg::Formulas => Suite::Formulas,
        SuiteArg::Solvers => Suite::Solvers,
    };
    let mut ranges = VerifyRanges {
        seed: args.seed,
        workers: args.workers.max(1),
        ..VerifyRanges::default()
    };
    if let Some(max_n) = args.max_n {
        match suite {
            Suite::Paper => ranges.paper_max_n = max_n,
            Suite::Formulas => ranges.formulas_max_n = max_n,
            Suite::Solvers => ranges.solvers_max_n = max_n,
        }
    }
    let report = run_suite(suite, &ranges)?;
    print!("{report}");
    if let Some(path) = &args.json {
        write_text(path, &report.to_json())?;
    }
    Ok(report.passed())
}

fn cmd_label(args: &LabelArgs) -> equicut::Result<()> {
    if let Some(path) = &args.signed {
        let sg = signed_graph_from_json(&read_text(path)?)?;
        let witness = is_parity_signed(&sg)?;
        let doc = serde_json::json!({
            "negative_edges": sg.negative_edge_count(),
            "balanced": is_balanced(&sg),
            "parity_signed": witness.is_some(),
            "witness": witness.as_ref().map(|w| w.members().to_vec()),
        });
        return emit(&doc.to_string(), args.out.as_deref());
    }
    let (Some(graph), Some(labeling)) = (&args.graph, &args.labeling) else {
        return Err(Error::InvalidInput(
            "label needs either --graph with --labeling, or --signed".into(),
        ));
    };
    let g = graph_from_json(&read_text(graph)?)?;
    let f = labeling_from_json(&read_text(labeling)?)?;
    let sg = signature_from_labeling(&g, &f)?;
    eprintln!("{} negative edges", sg.negative_edge_count());
    emit(&signed_graph_to_json(&sg), args.out.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Gen(a) => cmd_gen(a).map(|_| true),
        Command::Solve(a) => cmd_solve(a).map(|_| true),
        Command::Sweep(a) => cmd_sweep(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
        Command::Label(a) => cmd_label(a).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
