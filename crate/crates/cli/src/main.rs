//! Command-line front end: graph generation, minimum cuts, contractions,
//! certificates and experiment batches.
//!
//! Exit status is 0 on success, 2 on bad input (flags, files, generator
//! parameters) and 1 when an internal invariant check fails.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mincut_core::certificate::sparse_certificate;
use mincut_core::contraction::{
    amplified_contraction_with, dense_contraction_with, AmplificationConfig, ContractionError, Reducer,
};
use mincut_core::experiments::{
    measure_component_count, measure_diameter_sum, measure_edge_budget, measure_preservation,
    measure_runtime_scaling, ExperimentError,
};
use mincut_core::generate::GeneratorSpec;
use mincut_core::io::{load_graph, write_graph, Format};
use mincut_core::report::{write_report, CertificateRecord, ContractionRecord, CutRecord, Report};
use mincut_core::solver::{edge_connectivity_with, oracle_mincut_with, MinCutResult, SolverError, StoerWagner, Variant};
use mincut_core::{Exec, MultiGraph, SimpleGraph};

const THREADS_ENV: &str = "MINCUT_THREADS";

#[derive(Parser)]
#[command(name = "mincut", version, about = "Edge connectivity by random 2-out contraction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph.
    Gen(GenArgs),
    /// Edge connectivity with a witness cut.
    Mincut(SolveArgs),
    /// Write the contracted multigraph and its vertex map.
    Contract(SolveArgs),
    /// Write the edge ids of a sparse k-certificate.
    Certificate(CertificateArgs),
    /// Run a named experiment batch.
    Stats(StatsArgs),
    /// Exact minimum cut by enumeration or max-flow.
    Oracle(OracleArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph file to read.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Inline generator spec such as `two_cliques:10,4`.
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<GeneratorSpec>,
}

#[derive(Args)]
struct Common {
    /// Graph file format: `edge-list` or `dimacs`.
    #[arg(long, default_value = "edge-list")]
    format: Format,
    /// Master seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long = "gen", value_name = "SPEC")]
    generator: GeneratorSpec,
    #[arg(long, default_value = "edge-list")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Graph path; stdout when absent.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Tuning {
    #[arg(long, default_value_t = 1.0)]
    eps: f64,
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    /// Repetition count (overrides the derived default).
    #[arg(long)]
    q: Option<usize>,
    /// Vote threshold (overrides the derived default).
    #[arg(long)]
    r: Option<usize>,
    /// `amplified` or `dense`.
    #[arg(long, default_value = "amplified")]
    variant: Variant,
    /// `certificate` or `random_sample`.
    #[arg(long, default_value = "certificate")]
    reducer: Reducer,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    tuning: Tuning,
}

#[derive(Args)]
struct CertificateArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct StatsArgs {
    /// `components`, `diameter`, `preservation`, `edge-budget` or `runtime`.
    #[arg(long)]
    experiment: String,
    /// Instance family; `runtime` takes it once per size.
    #[arg(long = "gen", value_name = "SPEC", required = true)]
    generators: Vec<GeneratorSpec>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Draws per vertex for `components` and `preservation`.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(flatten)]
    tuning: Tuning,
}

enum CliError {
    Input(String),
    Invariant(String),
}

type CliResult<T> = Result<T, CliError>;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Invariant(_) => CliError::Invariant(e.to_string()),
            SolverError::Contraction(c) => c.into(),
            other => input(other.to_string()),
        }
    }
}

impl From<ContractionError> for CliError {
    fn from(e: ContractionError) -> Self {
        input(e.to_string())
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Solver(s) => s.into(),
            other => input(other.to_string()),
        }
    }
}

fn load(source: &Source, format: Format, seed: u64) -> CliResult<SimpleGraph> {
    match (&source.input, &source.generator) {
        (Some(path), None) => {
            let file = File::open(path).map_err(|e| input(format!("--input: cannot open {}: {e}", path.display())))?;
            load_graph(BufReader::new(file), format).map_err(|e| input(format!("--input: {}: {e}", path.display())))
        }
        (None, Some(spec)) => spec.generate(seed).map_err(|e| input(format!("--gen: {e}"))),
        _ => Err(input("exactly one of --input and --gen is required")),
    }
}

fn config(n: usize, t: &Tuning) -> CliResult<AmplificationConfig> {
    if !(t.eps > 0.0 && t.eps <= 1.0) {
        return Err(input("--eps: must lie in (0, 1]"));
    }
    if !(t.gamma > 0.0 && t.gamma.is_finite()) {
        return Err(input("--gamma: must be positive"));
    }
    let mut cfg = AmplificationConfig::new(n)
        .with_eps(t.eps)
        .with_gamma(t.gamma)
        .with_reducer(t.reducer);
    if t.q.is_some() || t.r.is_some() {
        let q = t.q.unwrap_or(cfg.q);
        let r = t.r.unwrap_or_else(|| ((cfg.p_hat * q as f64 / 2.0).ceil() as usize).clamp(1, q.max(1)));
        if q == 0 {
            return Err(input("--q: must be positive"));
        }
        if r == 0 || r > q {
            return Err(input(format!("--r: must lie in 1..={q}")));
        }
        cfg = cfg.with_repetitions(q, r);
    }
    Ok(cfg)
}

fn write_to(path: &Path, report: &Report) -> CliResult<()> {
    let file = File::create(path).map_err(|e| input(format!("--output: cannot create {}: {e}", path.display())))?;
    write_report(report, BufWriter::new(file)).map_err(|e| input(format!("--output: {}: {e}", path.display())))
}

fn report_path(common_output: &Option<PathBuf>, default: &str) -> PathBuf {
    common_output.clone().unwrap_or_else(|| PathBuf::from(default))
}

fn print_cut(res: &MinCutResult) {
    if res.is_singleton {
        println!("lambda = {} (singleton)", res.value);
    } else {
        println!("lambda = {}", res.value);
    }
}

fn cut_report(g: &SimpleGraph, res: &MinCutResult, seed: u64) -> Report {
    Report::Cut(CutRecord::new(&res.witness, res.method.as_str(), g.vertex_count(), g.edge_count(), seed))
}

fn run_gen(args: GenArgs) -> CliResult<()> {
    let g = args.generator.generate(args.seed).map_err(|e| input(format!("--gen: {e}")))?;
    match &args.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| input(format!("--output: cannot create {}: {e}", path.display())))?;
            let mut sink = BufWriter::new(file);
            write_graph(&g, &mut sink, args.format)
                .and_then(|()| sink.flush())
                .map_err(|e| input(format!("--output: {}: {e}", path.display())))?;
            println!("n = {}, m = {}", g.vertex_count(), g.edge_count());
        }
        None => {
            let stdout = io::stdout();
            write_graph(&g, stdout.lock(), args.format).map_err(|e| input(format!("stdout: {e}")))?;
        }
    }
    Ok(())
}

fn run_mincut(args: SolveArgs) -> CliResult<()> {
    let g = load(&args.source, args.common.format, args.common.seed)?;
    let cfg = config(g.vertex_count(), &args.tuning)?;
    let (res, _) = edge_connectivity_with(&g, &cfg, args.tuning.variant, args.common.seed, &StoerWagner, Exec::default())?;
    print_cut(&res);
    write_to(&report_path(&args.common.output, "mincut_report.json"), &cut_report(&g, &res, args.common.seed))
}

fn run_contract(args: SolveArgs) -> CliResult<()> {
    let g = load(&args.source, args.common.format, args.common.seed)?;
    let cfg = config(g.vertex_count(), &args.tuning)?;
    let seed = args.common.seed;
    let mg: MultiGraph = match args.tuning.variant {
        Variant::Amplified => amplified_contraction_with(&g, &cfg, seed, Exec::default())?.graph,
        Variant::Dense => dense_contraction_with(&g, &cfg, seed, Exec::default())?.graph,
    };
    println!("supernodes = {}, edges = {}", mg.supernode_count(), mg.edge_count());
    write_to(
        &report_path(&args.common.output, "contract_report.json"),
        &Report::Contraction(ContractionRecord::new(&mg, seed)),
    )
}

fn run_certificate(args: CertificateArgs) -> CliResult<()> {
    if args.k == 0 {
        return Err(input("--k: must be positive"));
    }
    let g = load(&args.source, args.common.format, args.common.seed)?;
    let cert = sparse_certificate(&MultiGraph::identity(&g), args.k);
    println!("retained = {} of {} edges (k = {})", cert.len(), g.edge_count(), args.k);
    write_to(
        &report_path(&args.common.output, "certificate_report.json"),
        &Report::Certificate(CertificateRecord {
            k: cert.k,
            retained_count: cert.len(),
            retained_edge_ids: cert.retained_edge_ids,
            forest_index: cert.forest_index,
        }),
    )
}

fn run_oracle(args: OracleArgs) -> CliResult<()> {
    let g = load(&args.source, args.common.format, args.common.seed)?;
    let res = oracle_mincut_with(&g, Exec::default())?;
    print_cut(&res);
    write_to(&report_path(&args.common.output, "oracle_report.json"), &cut_report(&g, &res, args.common.seed))
}

fn run_stats(args: StatsArgs) -> CliResult<()> {
    let exec = Exec::default();
    let single = || -> CliResult<&GeneratorSpec> {
        match args.generators.as_slice() {
            [spec] => Ok(spec),
            _ => Err(input(format!("--gen: `{}` takes exactly one spec", args.experiment))),
        }
    };
    if args.trials == 0 {
        return Err(input("--trials: must be positive"));
    }
    let batch = match args.experiment.as_str() {
        "components" => measure_component_count(single()?, args.k, args.trials, args.seed, exec)?,
        "diameter" => measure_diameter_sum(single()?, args.trials, args.seed, exec)?,
        "preservation" => {
            measure_preservation(single()?, args.tuning.eps, args.k, args.trials, args.seed, exec)?
        }
        "edge-budget" => {
            let spec = single()?;
            let n = spec.generate(0).map_err(|e| input(format!("--gen: {e}")))?.vertex_count();
            measure_edge_budget(spec, &config(n, &args.tuning)?, args.trials, args.seed, exec)?
        }
        "runtime" => measure_runtime_scaling(&args.generators, args.tuning.variant, args.trials, args.seed, exec)?,
        other => return Err(input(format!("--experiment: unknown experiment `{other}`"))),
    };
    let stats: Vec<String> = batch.stats.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    println!(
        "{}: {} trials, mean {}, max {}; {}",
        batch.instance,
        batch.trial_count,
        batch.summary.mean,
        batch.summary.max,
        stats.join(", ")
    );
    write_to(&report_path(&args.output, "stats_report.json"), &Report::Batch(batch))
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| input(format!("{THREADS_ENV}: expected a positive integer, got `{value}`")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Invariant(format!("{THREADS_ENV}: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    configure_threads()?;
    match cli.command {
        Command::Gen(a) => run_gen(a),
        Command::Mincut(a) => run_mincut(a),
        Command::Contract(a) => run_contract(a),
        Command::Certificate(a) => run_certificate(a),
        Command::Stats(a) => run_stats(a),
        Command::Oracle(a) => run_oracle(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Invariant(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
