//! Run configuration, timed runs and thread-scaling sweeps.
//!
//! A run is split into two timed phases: ranking (RT) and enumeration (ET).
//! The total (TT) is measured independently around both, so `TT ≈ RT + ET`
//! is an observed property rather than a sum. RT is measured for every
//! algorithm, including those that do not rank.

use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use crate::enumerate::{par_mce, par_ttt, ttt, ParallelConfig, Subproblem, DEFAULT_CUTOFF};
use crate::graph::{load_edge_list, Graph};
use crate::ranking::{RankAssignment, RankStrategy};
use crate::report::EnumerationReport;
use crate::sink::{writer_sink, CliqueSink, CountingSink, HistogramSink};
use crate::testlab::GeneratorSpec;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ttt,
    ParTtt,
    ParMce,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ttt => "ttt",
            Algorithm::ParTtt => "parttt",
            Algorithm::ParMce => "parmce",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ttt" => Ok(Algorithm::Ttt),
            "parttt" => Ok(Algorithm::ParTtt),
            "parmce" => Ok(Algorithm::ParMce),
            other => Err(Error::Config(format!(
                "unknown algorithm `{other}` (expected ttt, parttt or parmce)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OutputMode {
    #[default]
    Count,
    Histogram,
    List,
}

impl FromStr for OutputMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(OutputMode::Count),
            "histogram" => Ok(OutputMode::Histogram),
            "list" => Ok(OutputMode::List),
            other => Err(Error::Config(format!(
                "unknown mode `{other}` (expected count, histogram or list)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Generator(GeneratorSpec),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub source: GraphSource,
    pub algorithm: Algorithm,
    /// Only meaningful for [`Algorithm::ParMce`]; defaults to degree there.
    pub ordering: Option<RankStrategy>,
    pub threads: usize,
    pub mode: OutputMode,
    pub cutoff: usize,
    /// Destination of the clique listing in list mode.
    pub output: Option<PathBuf>,
    pub canonical: bool,
    pub original_labels: bool,
    /// Overrides the seed of a `gnp` generator.
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn new(source: GraphSource, algorithm: Algorithm) -> Self {
        RunConfig {
            source,
            algorithm,
            ordering: None,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            mode: OutputMode::Count,
            cutoff: DEFAULT_CUTOFF,
            output: None,
            canonical: false,
            original_labels: false,
            seed: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.threads == 0 {
            return Err(Error::Config("thread count must be at least 1".into()));
        }
        if self.ordering.is_some() && self.algorithm != Algorithm::ParMce {
            return Err(Error::Config(format!(
                "an ordering only applies to parmce, not {}",
                self.algorithm
            )));
        }
        Ok(())
    }

    /// The ranking a run uses, if any.
    pub fn effective_ordering(&self) -> Option<RankStrategy> {
        match self.algorithm {
            Algorithm::ParMce => Some(self.ordering.unwrap_or(RankStrategy::Degree)),
            _ => None,
        }
    }

    pub fn parallel(&self) -> ParallelConfig {
        ParallelConfig::new(self.threads).with_cutoff(self.cutoff)
    }
}

/// Reads or generates the input graph.
pub fn load_graph(cfg: &RunConfig) -> Result<Graph> {
    match &cfg.source {
        GraphSource::File(path) => {
            let in_file = |e: Error| Error::Input {
                path: path.clone(),
                source: Box::new(e),
            };
            let file = File::open(path).map_err(|e| in_file(e.into()))?;
            load_edge_list(BufReader::new(file)).map_err(in_file)
        }
        GraphSource::Generator(spec) => {
            let spec = match (*spec, cfg.seed) {
                (GeneratorSpec::Gnp { n, p, .. }, Some(seed)) => GeneratorSpec::Gnp { n, p, seed },
                (spec, _) => spec,
            };
            Ok(spec.build())
        }
    }
}

/// Loads the graph and runs it. In list mode cliques go to `cfg.output`, or
/// standard output when unset.
pub fn run(cfg: &RunConfig) -> Result<EnumerationReport> {
    cfg.validate()?;
    let g = load_graph(cfg)?;
    if cfg.mode != OutputMode::List {
        return run_on_graph(&g, cfg, None::<io::Sink>);
    }
    match &cfg.output {
        Some(path) => run_on_graph(&g, cfg, Some(BufWriter::new(File::create(path)?))),
        None => run_on_graph(&g, cfg, Some(BufWriter::new(io::stdout()))),
    }
}

fn enumerate_with<S: CliqueSink + ?Sized>(
    g: &Graph,
    cfg: &RunConfig,
    rank: Option<&RankAssignment>,
    sink: &S,
) {
    match (cfg.algorithm, rank) {
        (Algorithm::Ttt, _) => ttt(g, Subproblem::root(g), sink),
        (Algorithm::ParTtt, _) => par_ttt(g, Subproblem::root(g), sink, &cfg.parallel()),
        (Algorithm::ParMce, Some(rank)) => par_mce(g, rank, sink, &cfg.parallel()),
        (Algorithm::ParMce, None) => unreachable!("parmce runs always rank"),
    }
}

/// Runs one configured enumeration on `g`. `listing` receives the cliques in
/// list mode and is ignored otherwise.
pub fn run_on_graph<W: Write + Send>(
    g: &Graph,
    cfg: &RunConfig,
    listing: Option<W>,
) -> Result<EnumerationReport> {
    cfg.validate()?;
    let mut report = EnumerationReport {
        algorithm: cfg.algorithm.to_string(),
        ordering: cfg.effective_ordering().map(|o| o.to_string()),
        threads: if cfg.algorithm == Algorithm::Ttt {
            1
        } else {
            cfg.threads
        },
        n: g.n(),
        m: g.m(),
        ..Default::default()
    };

    let total = Instant::now();
    let rank_start = Instant::now();
    let rank = cfg
        .effective_ordering()
        .map(|o| RankAssignment::compute(g, o));
    let rt = rank_start.elapsed();

    let enum_start = Instant::now();
    match cfg.mode {
        OutputMode::Count => {
            let sink = CountingSink::new();
            enumerate_with(g, cfg, rank.as_ref(), &sink);
            report.set_counts(sink.summary());
        }
        OutputMode::Histogram => {
            let sink = HistogramSink::new();
            enumerate_with(g, cfg, rank.as_ref(), &sink);
            report.set_histogram(sink.histogram());
        }
        OutputMode::List => {
            let out = listing
                .ok_or_else(|| Error::Config("list mode needs an output destination".into()))?;
            let sink = (
                CountingSink::new(),
                writer_sink(out, g, cfg.original_labels, cfg.canonical),
            );
            enumerate_with(g, cfg, rank.as_ref(), &sink);
            let (counter, writer) = sink;
            writer.finish()?;
            report.set_counts(counter.summary());
        }
    }
    let et = enum_start.elapsed();
    let tt = total.elapsed();

    report.rt_seconds = rt.as_secs_f64();
    report.et_seconds = et.as_secs_f64();
    report.tt_seconds = tt.as_secs_f64();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub threads: usize,
    pub et_seconds: f64,
    /// Sequential baseline ET divided by this row's ET.
    pub speedup: f64,
    pub clique_count: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub algorithm: String,
    pub ordering: Option<String>,
    pub baseline_et_seconds: f64,
    pub baseline_count: u64,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// `true` if every row found as many cliques as the baseline.
    pub fn counts_agree(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.clique_count == self.baseline_count)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# {} ({}) vs ttt baseline ET {:.4} s, {} cliques\n",
            self.algorithm,
            self.ordering.as_deref().unwrap_or("-"),
            self.baseline_et_seconds,
            self.baseline_count
        );
        out.push_str(&format!(
            "{:>8}  {:>12}  {:>8}  {:>14}\n",
            "threads", "et_seconds", "speedup", "cliques"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "{:>8}  {:>12.4}  {:>8.2}  {:>14}\n",
                r.threads, r.et_seconds, r.speedup, r.clique_count
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("threads,et_seconds,speedup,clique_count\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{:.6},{:.4},{}\n",
                r.threads, r.et_seconds, r.speedup, r.clique_count
            ));
        }
        out
    }
}

/// Runs the sequential baseline once, then `cfg` at each thread count, in
/// count mode.
pub fn scaling_sweep(g: &Graph, cfg: &RunConfig, thread_counts: &[usize]) -> Result<SweepTable> {
    let mut base_cfg = cfg.clone();
    base_cfg.algorithm = Algorithm::Ttt;
    base_cfg.ordering = None;
    base_cfg.mode = OutputMode::Count;
    let baseline = run_on_graph(g, &base_cfg, None::<io::Sink>)?;

    let mut rows = Vec::with_capacity(thread_counts.len());
    for &threads in thread_counts {
        let mut run_cfg = cfg.clone();
        run_cfg.threads = threads;
        run_cfg.mode = OutputMode::Count;
        let report = run_on_graph(g, &run_cfg, None::<io::Sink>)?;
        rows.push(SweepRow {
            threads,
            et_seconds: report.et_seconds,
            speedup: baseline.et_seconds / report.et_seconds.max(f64::MIN_POSITIVE),
            clique_count: report.clique_count,
        });
    }
    Ok(SweepTable {
        algorithm: cfg.algorithm.to_string(),
        ordering: cfg.effective_ordering().map(|o| o.to_string()),
        baseline_et_seconds: baseline.et_seconds,
        baseline_count: baseline.clique_count,
        rows,
    })
}

/// Dispersion of per-vertex subproblem cost under a ranking.
#[derive(Clone, Debug, PartialEq)]
pub struct SubproblemProfile {
    pub ordering: RankStrategy,
    pub subproblems: usize,
    pub total_seconds: f64,
    pub mean_seconds: f64,
    pub max_seconds: f64,
    /// Standard deviation over mean.
    pub coefficient_of_variation: f64,
    /// Share of the total spent in the costliest 1% of subproblems.
    pub top_percent_share: f64,
}

impl fmt::Display for SubproblemProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ordering={}", self.ordering)?;
        writeln!(f, "subproblems={}", self.subproblems)?;
        writeln!(f, "total_seconds={:.6}", self.total_seconds)?;
        writeln!(f, "mean_seconds={:.9}", self.mean_seconds)?;
        writeln!(f, "max_seconds={:.6}", self.max_seconds)?;
        writeln!(f, "cv={:.4}", self.coefficient_of_variation)?;
        writeln!(f, "top1pct_share={:.4}", self.top_percent_share)
    }
}

/// Times every per-vertex subproblem sequentially.
pub fn profile_subproblems(g: &Graph, ordering: RankStrategy) -> SubproblemProfile {
    let rank = RankAssignment::compute(g, ordering);
    let sink = CountingSink::with_shards(2);
    let mut times: Vec<f64> = g
        .vertices()
        .map(|v| {
            let start = Instant::now();
            ttt(
                g,
                crate::enumerate::subproblem_for_vertex(g, &rank, v),
                &sink,
            );
            start.elapsed().as_secs_f64()
        })
        .collect();

    let count = times.len().max(1) as f64;
    let total: f64 = times.iter().sum();
    let mean = total / count;
    let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / count;
    times.sort_unstable_by(|a, b| b.total_cmp(a));
    let top = times.len().div_ceil(100);
    let top_sum: f64 = times[..top.min(times.len())].iter().sum();
    SubproblemProfile {
        ordering,
        subproblems: times.len(),
        total_seconds: total,
        mean_seconds: mean,
        max_seconds: times.first().copied().unwrap_or(0.0),
        coefficient_of_variation: if mean > 0.0 { var.sqrt() / mean } else { 0.0 },
        top_percent_share: if total > 0.0 { top_sum / total } else { 0.0 },
    }
}
