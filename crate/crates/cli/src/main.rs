use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mce_core::driver::{
    self, load_graph, profile_subproblems, scaling_sweep, Algorithm, GraphSource, OutputMode,
    RunConfig,
};
use mce_core::testlab::GeneratorSpec;
use mce_core::{write_edge_list, RankStrategy};

#[derive(Parser)]
#[command(
    name = "parmce",
    version,
    about = "Maximal clique enumeration, sequential and parallel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the maximal cliques of a graph and report counts and timings.
    Run(RunArgs),
    /// Write a generated graph as an edge list.
    Gen {
        /// moonmoser:K | gnp:N,P,SEED | complete:N
        spec: GeneratorSpec,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time every per-vertex subproblem sequentially and report the spread.
    Profile {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Order::Degree)]
        order: Order,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Edge-list file ('#' and '%' comment lines allowed).
    #[arg(long)]
    input: Option<PathBuf>,
    /// moonmoser:K | gnp:N,P,SEED | complete:N
    #[arg(long = "gen")]
    generator: Option<GeneratorSpec>,
}

impl SourceArgs {
    fn source(&self) -> GraphSource {
        match (&self.input, self.generator) {
            (Some(path), _) => GraphSource::File(path.clone()),
            (None, Some(spec)) => GraphSource::Generator(spec),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = Algo::Parmce)]
    algo: Algo,
    /// Vertex ranking; parmce only (default degree).
    #[arg(long, value_enum)]
    order: Option<Order>,
    /// Worker threads (default: all hardware threads).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Count)]
    mode: Mode,
    /// Sort listed cliques so output does not depend on scheduling.
    #[arg(long)]
    canonical: bool,
    /// List cliques with the labels of the input file instead of dense ids.
    #[arg(long)]
    labels: bool,
    /// |cand| below which parallel searches continue sequentially.
    #[arg(long, default_value_t = mce_core::enumerate::DEFAULT_CUTOFF)]
    cutoff: usize,
    /// Clique listing (list mode) or sweep CSV destination.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Override the seed of a gnp generator.
    #[arg(long)]
    seed: Option<u64>,
    /// Thread counts for a scaling sweep against the ttt baseline, e.g. 1,2,4,8.
    #[arg(long, value_delimiter = ',')]
    sweep: Option<Vec<usize>>,
    /// Print the report as JSON instead of key=value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Ttt,
    Parttt,
    Parmce,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Degree,
    Triangle,
    Degeneracy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Count,
    Histogram,
    List,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Ttt => Algorithm::Ttt,
            Algo::Parttt => Algorithm::ParTtt,
            Algo::Parmce => Algorithm::ParMce,
        }
    }
}

impl From<Order> for RankStrategy {
    fn from(o: Order) -> Self {
        match o {
            Order::Degree => RankStrategy::Degree,
            Order::Triangle => RankStrategy::Triangle,
            Order::Degeneracy => RankStrategy::Degeneracy,
        }
    }
}

impl From<Mode> for OutputMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Count => OutputMode::Count,
            Mode::Histogram => OutputMode::Histogram,
            Mode::List => OutputMode::List,
        }
    }
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        let mut cfg = RunConfig::new(self.source.source(), self.algo.into());
        cfg.ordering = self.order.map(Into::into);
        if let Some(threads) = self.threads {
            cfg.threads = threads;
        }
        cfg.mode = self.mode.into();
        cfg.cutoff = self.cutoff;
        cfg.output = self.output.clone();
        cfg.canonical = self.canonical;
        cfg.original_labels = self.labels;
        cfg.seed = self.seed;
        cfg
    }
}

fn output_writer(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn run(args: RunArgs) -> Result<()> {
    let cfg = args.config();
    cfg.validate().map_err(|e| anyhow::anyhow!("usage: {e}"))?;

    if let Some(threads) = &args.sweep {
        if threads.is_empty() || threads.contains(&0) {
            bail!("usage: --sweep needs positive thread counts");
        }
        let g = load_graph(&cfg)?;
        let table = scaling_sweep(&g, &cfg, threads)?;
        print!("{}", table.to_text());
        match &cfg.output {
            Some(path) => std::fs::write(path, table.to_csv())
                .with_context(|| format!("writing {}", path.display()))?,
            None => print!("\n{}", table.to_csv()),
        }
        if !table.counts_agree() {
            bail!("clique counts differ between runs");
        }
        return Ok(());
    }

    let report = driver::run(&cfg)?;
    let text = if args.json {
        report.to_json() + "\n"
    } else {
        report.to_key_value()
    };
    // Cliques listed on stdout keep stdout to themselves.
    if cfg.mode == OutputMode::List && cfg.output.is_none() {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Gen { spec, output } => output_writer(output.as_ref())
            .and_then(|out| write_edge_list(&spec.build(), out).context("writing edge list")),
        Command::Profile { source, order } => {
            let cfg = RunConfig::new(source.source(), Algorithm::ParMce);
            load_graph(&cfg)
                .map(|g| {
                    print!("{}", profile_subproblems(&g, order.into()));
                })
                .map_err(Into::into)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
