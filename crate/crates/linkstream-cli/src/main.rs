use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use linkstream::io::{
    read_duration_stream, read_instant_stream, write_cliques, write_duration_stream, OutputFormat,
};
use linkstream::{
    enumerate_maximal_cliques, enumerate_maximal_delta_cliques, transform, Delta, InstantStream,
    LinkStream,
};
use linkstream_cli::bench::{bench_delta, bench_duration, CSV_HEADER};
use linkstream_cli::check::{run_delta_check, run_duration_check, CheckConfig};

/// Maximal cliques of link streams.
///
/// Duration-stream files hold `b e u v` lines (pair {u, v} linked over the
/// closed interval [b, e]); instant-stream files hold `t u v` lines. Both
/// accept `#` comments and an optional `#horizon α ω` header. Results go
/// to stdout (or --output); diagnostics go to stderr.
#[derive(Parser)]
#[command(name = "linkstream", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all maximal cliques of a duration stream
    Cliques(CliquesArgs),
    /// Compute all maximal Δ-cliques of an instant stream
    DeltaCliques(DeltaCliquesArgs),
    /// Export the duration stream an instant stream reduces to for a Δ
    Transform(TransformArgs),
    /// Cross-check the enumerators against brute-force oracles
    Check(CheckArgs),
    /// Time transform and enumeration over input files, reporting CSV
    Bench(BenchArgs),
    /// Print summary statistics of a stream file
    Stats(StatsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    /// One clique per line: `x y u1 u2 ... uk`
    Plain,
    /// One JSON object per line
    JsonLines,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => OutputFormat::Plain,
            FormatArg::JsonLines => OutputFormat::JsonLines,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// Maximal cliques of random duration streams
    Duration,
    /// Maximal Δ-cliques of random instant streams, Δ grid {0, 1, 2, 5, span}
    Delta,
}

#[derive(Args)]
struct CliquesArgs {
    /// Duration-stream file
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
    /// Write results here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DeltaCliquesArgs {
    /// Instant-stream file
    input: PathBuf,
    /// Relaxation parameter Δ ≥ 0, at most the horizon span
    #[arg(long)]
    delta: i64,
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
    /// Write results here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    /// Instant-stream file
    input: PathBuf,
    /// Relaxation parameter Δ ≥ 0, at most the horizon span
    #[arg(long)]
    delta: i64,
    /// Write the derived stream here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Which enumerator to check
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Number of randomized trials
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Largest node count an instance may have
    #[arg(long, default_value_t = 6)]
    max_nodes: usize,
    /// Largest link (or event) count an instance may have
    #[arg(long, default_value_t = 30)]
    max_links: usize,
    /// Base seed; trial i derives its own seed as seed + i
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Stream files to measure
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Comma-separated Δ values; when given, inputs are instant streams,
    /// otherwise duration streams
    #[arg(long, value_delimiter = ',')]
    delta_grid: Vec<i64>,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Stream file; the kind is detected from the field count
    input: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Cliques(args) => cmd_cliques(args),
        Command::DeltaCliques(args) => cmd_delta_cliques(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Check(args) => cmd_check(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Stats(args) => cmd_stats(args),
    }
}

fn load_duration(path: &Path) -> Result<LinkStream> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    read_duration_stream(BufReader::new(file))
        .with_context(|| format!("reading {}", path.display()))
}

fn load_instant(path: &Path) -> Result<InstantStream> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    read_instant_stream(BufReader::new(file))
        .with_context(|| format!("reading {}", path.display()))
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            let file =
                File::create(p).with_context(|| format!("cannot create {}", p.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_cliques(args: CliquesArgs) -> Result<ExitCode> {
    let started = Instant::now();
    let stream = load_duration(&args.input)?;
    let cliques = enumerate_maximal_cliques(&stream);
    let mut out = open_output(args.output.as_deref())?;
    write_cliques(&mut out, stream.nodes(), &cliques, args.format.into())?;
    out.flush()?;
    eprintln!(
        "n={} m={} cliques={} elapsed_ms={}",
        stream.node_count(),
        stream.link_count(),
        cliques.len(),
        started.elapsed().as_millis()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_delta_cliques(args: DeltaCliquesArgs) -> Result<ExitCode> {
    let started = Instant::now();
    let instant = load_instant(&args.input)?;
    let delta = Delta::new(args.delta)?;
    let cliques = enumerate_maximal_delta_cliques(&instant, delta)?;
    let mut out = open_output(args.output.as_deref())?;
    write_cliques(&mut out, instant.nodes(), &cliques, args.format.into())?;
    out.flush()?;
    eprintln!(
        "n={} m={} delta={} cliques={} elapsed_ms={}",
        instant.node_count(),
        instant.event_count(),
        delta,
        cliques.len(),
        started.elapsed().as_millis()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_transform(args: TransformArgs) -> Result<ExitCode> {
    let instant = load_instant(&args.input)?;
    let derived = transform(&instant, Delta::new(args.delta)?)?;
    let mut out = open_output(args.output.as_deref())?;
    write_duration_stream(&mut out, &derived)?;
    out.flush()?;
    eprintln!(
        "n={} m={} links={}",
        derived.node_count(),
        instant.event_count(),
        derived.link_count()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode> {
    let cfg = CheckConfig {
        trials: args.trials,
        max_nodes: args.max_nodes,
        max_links: args.max_links,
        seed: args.seed,
    };
    let failures = match args.kind {
        KindArg::Duration => run_duration_check(&cfg, |_, _| {})?,
        KindArg::Delta => run_delta_check(&cfg, |_, _, _, _| {})?,
    };
    for f in &failures {
        eprintln!("trial {} (seed {}) failed: {}", f.trial, f.seed, f.detail);
    }
    println!("{} trials, {} failures", cfg.trials, failures.len());
    Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    let mut rows = Vec::new();
    for input in &args.inputs {
        let name = input.display().to_string();
        if args.delta_grid.is_empty() {
            let stream = load_duration(input)?;
            rows.push(bench_duration(&name, &stream));
        } else {
            let instant = load_instant(input)?;
            for &d in &args.delta_grid {
                rows.push(bench_delta(&name, &instant, Delta::new(d)?)?);
            }
        }
    }
    let mut out = open_output(args.csv.as_deref())?;
    writeln!(out, "{CSV_HEADER}")?;
    for row in &rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(args: StatsArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.input)
        .with_context(|| format!("cannot open {}", args.input.display()))?;
    let context = || format!("reading {}", args.input.display());
    if is_instant_file(&text) {
        let s = read_instant_stream(text.as_bytes()).with_context(context)?;
        println!("kind instant");
        println!("n {}", s.node_count());
        println!("m {}", s.event_count());
        println!("horizon {} {}", s.horizon().begin(), s.horizon().end());
        println!("pair_count {}", s.pair_count());
    } else {
        let s = read_duration_stream(text.as_bytes()).with_context(context)?;
        let st = s.stats();
        println!("kind duration");
        println!("n {}", st.node_count);
        println!("m {}", st.link_count);
        println!("horizon {} {}", st.horizon.begin(), st.horizon.end());
        println!("pair_count {}", st.pair_count);
        println!("total_link_duration {}", st.total_link_duration);
    }
    Ok(ExitCode::SUCCESS)
}

/// Instant-stream lines have three fields, duration lines four. An empty
/// file parses the same either way and is treated as a duration stream.
fn is_instant_file(text: &str) -> bool {
    text.lines()
        .map(|line| line.split_whitespace().collect::<Vec<_>>())
        .find(|fields| !fields.is_empty() && !fields[0].starts_with('#'))
        .is_some_and(|fields| fields.len() == 3)
}
