//! Thin CLI over the library: gen / trace / genus / cycles / experiment.
//!
//! Exit codes: 0 success, 1 usage error, 2 budget-exceeded heuristic
//! fallback, 3 I/O or parse error. Diagnostics go to stderr, data to stdout
//! or `--out`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genus::anneal::{heuristic_genus, AnnealConfig};
use genus::cycles::{count_short_cycles, lemma1_bound, DEFAULT_CYCLE_BUDGET};
use genus::experiment::{
    records_to_csv, run_sweep, summarize, summary_to_csv, summary_to_gnuplot, SweepConfig,
    SweepMode,
};
use genus::graph::DartGraph;
use genus::rotation::{trace_faces, RotationSystem};
use genus::sample::{sample_batch, SampleConfig};
use genus::search::{
    euler_lower_bound, exact_genus, max_genus_upper_bound, SearchMode, DEFAULT_SEARCH_BUDGET,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "genus", version, about = "Orientable genus of graphs via rotation systems")]
struct Cli {
    /// Worker threads; 0 auto-detects. Output is identical either way.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Suppress progress diagnostics on stderr.
    #[arg(long, global = true, default_value_t = false)]
    quiet: bool,
    /// Output format for result data.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Sample random d-regular multigraphs (configuration model).
    Gen(GenArgs),
    /// Trace the faces of a rotation system and report its genus.
    Trace(TraceArgs),
    /// Compute or bound the minimum genus of a graph.
    Genus(GenusArgs),
    /// Census of short cycles and the expectation bound.
    Cycles(CyclesArgs),
    /// Monte Carlo sweep over random regular graphs.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Reject loops and parallel edges.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    simple: bool,
    /// Reject disconnected samples.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    connected: bool,
    /// Number of graphs to emit.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Output file (single graph) or directory (multiple graphs).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    rotation: PathBuf,
}

#[derive(Args)]
struct GenusArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = GenusMode::Exact)]
    mode: GenusMode,
    /// Face-trace dart-step budget for the exact search.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the witness rotation system here.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenusMode {
    Exact,
    Anneal,
    Bounds,
}

#[derive(Args)]
struct CyclesArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Maximum cycle length counted.
    #[arg(long, default_value_t = 5)]
    m: usize,
    #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 2)]
    n_step: usize,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = SweepModeArg::Exact)]
    mode: SweepModeArg,
    /// Cycle census cap.
    #[arg(long, default_value_t = 5)]
    m: usize,
    /// Largest n attempted exactly.
    #[arg(long, default_value_t = 16)]
    exact_max: usize,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    simple: bool,
    /// Write the record CSV here; summary goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepModeArg {
    Exact,
    Anneal,
}

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_IO: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::from(EXIT_OK);
            }
            eprintln!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if cli.threads > 0 {
        if let Err(e) =
            rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global()
        {
            eprintln!("failed to configure thread pool: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let code = match &cli.command {
        Command::Gen(args) => cmd_gen(&cli, args),
        Command::Trace(args) => cmd_trace(&cli, args),
        Command::Genus(args) => cmd_genus(&cli, args),
        Command::Cycles(args) => cmd_cycles(&cli, args),
        Command::Experiment(args) => cmd_experiment(&cli, args),
    };
    ExitCode::from(code)
}

fn read_graph(path: &Path) -> Result<DartGraph, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read {}: {e}", path.display());
        EXIT_IO
    })?;
    DartGraph::parse_text(&text).map_err(|e| {
        eprintln!("cannot parse {}: {e}", path.display());
        EXIT_IO
    })
}

fn write_out(path: &Path, data: &str) -> Result<(), u8> {
    fs::write(path, data).map_err(|e| {
        eprintln!("cannot write {}: {e}", path.display());
        EXIT_IO
    })
}

fn cmd_gen(cli: &Cli, args: &GenArgs) -> u8 {
    let cfg = SampleConfig {
        d: args.d,
        n: args.n,
        seed: args.seed,
        require_simple: args.simple,
        require_connected: args.connected,
        max_rejects: 10_000,
    };
    if let Err(e) = cfg.validate() {
        eprintln!("{e}");
        return EXIT_USAGE;
    }
    let graphs = match sample_batch(&cfg, args.count) {
        Ok(gs) => gs,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_IO;
        }
    };
    match &args.out {
        None => {
            for g in &graphs {
                print!("{}", g.to_text());
            }
        }
        Some(path) if args.count == 1 => {
            if write_out(path, &graphs[0].to_text()).is_err() {
                return EXIT_IO;
            }
        }
        Some(dir) => {
            if let Err(e) = fs::create_dir_all(dir) {
                eprintln!("cannot create {}: {e}", dir.display());
                return EXIT_IO;
            }
            for (i, g) in graphs.iter().enumerate() {
                let path = dir.join(format!("graph_{i:04}.txt"));
                if write_out(&path, &g.to_text()).is_err() {
                    return EXIT_IO;
                }
            }
            if !cli.quiet {
                eprintln!("wrote {} graphs to {}", graphs.len(), dir.display());
            }
        }
    }
    EXIT_OK
}

fn cmd_trace(cli: &Cli, args: &TraceArgs) -> u8 {
    let g = match read_graph(&args.graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let rot_text = match fs::read_to_string(&args.rotation) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", args.rotation.display());
            return EXIT_IO;
        }
    };
    let rot = match RotationSystem::parse_text(&g, &rot_text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("cannot parse {}: {e}", args.rotation.display());
            return EXIT_IO;
        }
    };
    let emb = match trace_faces(&g, &rot) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_IO;
        }
    };
    let mut histogram: Vec<(usize, usize)> = Vec::new();
    for &len in &emb.face_lengths {
        match histogram.last_mut() {
            Some((l, c)) if *l == len => *c += 1,
            _ => histogram.push((len, 1)),
        }
    }
    match cli.format {
        Format::JsonLines => {
            println!(
                "{}",
                json!({
                    "F": emb.num_faces,
                    "face_lengths": emb.face_lengths,
                    "genus": emb.genus,
                    "alpha": emb.alpha,
                })
            );
        }
        Format::Csv => {
            println!("F,genus,alpha");
            println!("{},{},{}", emb.num_faces, emb.genus, emb.alpha);
        }
        Format::Text => {
            println!("F = {}", emb.num_faces);
            let hist: Vec<String> =
                histogram.iter().map(|(l, c)| format!("{l}x{c}")).collect();
            println!("face lengths: {}", hist.join(" "));
            println!("genus = {}", emb.genus);
            println!("alpha = {}", emb.alpha);
        }
    }
    EXIT_OK
}

fn cmd_genus(cli: &Cli, args: &GenusArgs) -> u8 {
    let g = match read_graph(&args.graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let result = match args.mode {
        GenusMode::Bounds => {
            let lower = euler_lower_bound(&g);
            let upper = max_genus_upper_bound(&g);
            match cli.format {
                Format::JsonLines => println!(
                    "{}",
                    json!({"mode": "bounds-only", "genus_lower": lower, "genus_upper": upper})
                ),
                Format::Csv => {
                    println!("mode,genus_lower,genus_upper");
                    println!("bounds-only,{lower},{upper}");
                }
                Format::Text => {
                    println!("mode = bounds-only");
                    println!("genus_lower = {lower}");
                    println!("genus_upper = {upper}");
                }
            }
            return EXIT_OK;
        }
        GenusMode::Exact => exact_genus(&g, args.budget),
        GenusMode::Anneal => {
            let cfg = AnnealConfig { seed: args.seed, ..AnnealConfig::default() };
            heuristic_genus(&g, &cfg)
        }
    };
    let result = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_IO;
        }
    };
    if let Some(path) = &args.witness_out {
        if let Some(witness) = &result.witness {
            if write_out(path, &witness.to_text(&g)).is_err() {
                return EXIT_IO;
            }
        }
    }
    match cli.format {
        Format::JsonLines => println!(
            "{}",
            json!({
                "mode": result.mode.as_str(),
                "genus_lower": result.genus_lower,
                "genus_upper": result.genus_upper,
                "alpha": result.alpha,
                "rotations_examined": result.rotations_examined,
                "trace_steps": result.trace_steps,
            })
        ),
        Format::Csv => {
            println!("mode,genus_lower,genus_upper,alpha,rotations_examined,trace_steps");
            println!(
                "{},{},{},{},{},{}",
                result.mode.as_str(),
                result.genus_lower,
                result.genus_upper,
                result.alpha,
                result.rotations_examined,
                result.trace_steps
            );
        }
        Format::Text => {
            println!("mode = {}", result.mode.as_str());
            println!("genus_lower = {}", result.genus_lower);
            println!("genus_upper = {}", result.genus_upper);
            println!("alpha = {}", result.alpha);
            println!("rotations_examined = {}", result.rotations_examined);
            if !cli.quiet {
                eprintln!("elapsed: {:?}, trace steps: {}", result.elapsed, result.trace_steps);
            }
        }
    }
    if args.mode == GenusMode::Exact && result.mode == SearchMode::Heuristic {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

fn cmd_cycles(cli: &Cli, args: &CyclesArgs) -> u8 {
    let g = match read_graph(&args.graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let census = match count_short_cycles(&g, args.m, args.budget) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_BUDGET;
        }
    };
    let degrees = g.degrees();
    let d = degrees.iter().copied().max().unwrap_or(0);
    let bound = if d >= 2 && args.m >= 2 {
        Some(lemma1_bound(d, args.m, Some(g.num_vertices())))
    } else {
        None
    };
    match cli.format {
        Format::JsonLines => {
            let counts: serde_json::Map<String, serde_json::Value> = census
                .counts
                .iter()
                .map(|(len, c)| (len.to_string(), json!(c)))
                .collect();
            println!(
                "{}",
                json!({
                    "m": census.max_len,
                    "counts": counts,
                    "total": census.total,
                    "total_excluding_loops": census.total_excluding_loops(),
                    "expectation_cap": bound.map(|b| b.simplified_cap),
                })
            );
        }
        Format::Csv => {
            println!("length,count");
            for (len, c) in &census.counts {
                println!("{len},{c}");
            }
        }
        Format::Text => {
            println!("m = {}", census.max_len);
            for (len, c) in &census.counts {
                println!("cycles of length {len}: {c}");
            }
            println!("total = {}", census.total);
            println!("total excluding loops = {}", census.total_excluding_loops());
            if let Some(b) = bound {
                println!("expectation cap d^m/2 = {}", b.simplified_cap);
                if let Some(sum) = b.finite_sum {
                    println!("finite-n expectation sum = {sum}");
                }
            }
        }
    }
    EXIT_OK
}

fn cmd_experiment(cli: &Cli, args: &ExperimentArgs) -> u8 {
    if args.n_min > args.n_max || args.n_step == 0 {
        eprintln!("invalid n range");
        return EXIT_USAGE;
    }
    let n_values: Vec<usize> = (args.n_min..=args.n_max).step_by(args.n_step).collect();
    let cfg = SweepConfig {
        d: args.d,
        n_values,
        samples_per_n: args.samples,
        seed: args.seed,
        mode: match args.mode {
            SweepModeArg::Exact => SweepMode::Exact,
            SweepModeArg::Anneal => SweepMode::Anneal,
        },
        m: args.m,
        exact_max: args.exact_max,
        budget: DEFAULT_SEARCH_BUDGET,
        require_simple: args.simple,
        require_connected: true,
    };
    let records = match run_sweep(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    let csv = records_to_csv(&records);
    match &args.out {
        Some(path) => {
            if write_out(path, &csv).is_err() {
                return EXIT_IO;
            }
            if !cli.quiet {
                eprintln!("wrote {} records to {}", records.len(), path.display());
            }
        }
        None => {
            if cli.format == Format::Csv {
                print!("{csv}");
            }
        }
    }
    match cli.format {
        Format::Csv => {}
        Format::JsonLines => {
            for r in &records {
                println!("{}", serde_json::to_string(r).expect("record serializes"));
            }
        }
        Format::Text => {
            let rows = match summarize(&records) {
                Ok(rows) => rows,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_IO;
                }
            };
            print!("{}", summary_to_csv(&rows));
            if let Some(path) = &args.out {
                let dat = path.with_extension("dat");
                if write_out(&dat, &summary_to_gnuplot(&rows)).is_err() {
                    return EXIT_IO;
                }
            }
        }
    }
    let budget_exceeded = records
        .iter()
        .any(|r| r.status == genus::experiment::RecordStatus::BudgetExceeded);
    if budget_exceeded {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}
