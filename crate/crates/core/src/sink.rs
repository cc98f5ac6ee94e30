//! Consumers of emitted maximal cliques.
//!
//! Engines call [`CliqueSink::emit`] from many worker threads at once. The
//! aggregating sinks keep one cache-padded shard per worker thread and only
//! merge shards when asked for a result, so emission never contends on a
//! single shared counter.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crossbeam_utils::CachePadded;

use crate::graph::{Graph, VertexId};

pub trait CliqueSink: Sync {
    /// Receives one maximal clique. Vertex order is unspecified.
    fn emit(&self, clique: &[VertexId]);
}

impl<S: CliqueSink + ?Sized> CliqueSink for &S {
    fn emit(&self, clique: &[VertexId]) {
        (**self).emit(clique)
    }
}

impl<A: CliqueSink, B: CliqueSink> CliqueSink for (A, B) {
    fn emit(&self, clique: &[VertexId]) {
        self.0.emit(clique);
        self.1.emit(clique);
    }
}

impl<S: CliqueSink> CliqueSink for Option<S> {
    fn emit(&self, clique: &[VertexId]) {
        if let Some(sink) = self {
            sink.emit(clique);
        }
    }
}

fn default_shards() -> usize {
    let hw = std::thread::available_parallelism().map_or(1, |n| n.get());
    hw.max(rayon::current_num_threads()) + 1
}

/// Shard for the calling thread. Threads outside a rayon pool share the last one.
#[inline]
fn shard_index(shards: usize) -> usize {
    match rayon::current_thread_index() {
        Some(i) => i % (shards - 1).max(1),
        None => shards - 1,
    }
}

#[derive(Default)]
struct CountShard {
    count: AtomicU64,
    size_sum: AtomicU64,
    max_size: AtomicUsize,
}

/// Counts cliques and tracks the size sum and maximum.
pub struct CountingSink {
    shards: Box<[CachePadded<CountShard>]>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CountSummary {
    pub count: u64,
    pub size_sum: u64,
    pub max_size: usize,
}

impl CountingSink {
    pub fn new() -> Self {
        Self::with_shards(default_shards())
    }

    pub fn with_shards(shards: usize) -> Self {
        let shards = shards.max(2);
        CountingSink {
            shards: (0..shards)
                .map(|_| CachePadded::new(CountShard::default()))
                .collect(),
        }
    }

    pub fn summary(&self) -> CountSummary {
        self.shards
            .iter()
            .fold(CountSummary::default(), |acc, s| CountSummary {
                count: acc.count + s.count.load(Ordering::Relaxed),
                size_sum: acc.size_sum + s.size_sum.load(Ordering::Relaxed),
                max_size: acc.max_size.max(s.max_size.load(Ordering::Relaxed)),
            })
    }

    pub fn count(&self) -> u64 {
        self.summary().count
    }
}

impl Default for CountingSink {
    fn default() -> Self {
        Self::new()
    }
}

impl CliqueSink for CountingSink {
    #[inline]
    fn emit(&self, clique: &[VertexId]) {
        let shard = &self.shards[shard_index(self.shards.len())];
        shard.count.fetch_add(1, Ordering::Relaxed);
        shard
            .size_sum
            .fetch_add(clique.len() as u64, Ordering::Relaxed);
        shard.max_size.fetch_max(clique.len(), Ordering::Relaxed);
    }
}

pub fn counting_sink() -> CountingSink {
    CountingSink::new()
}

/// Clique size → frequency.
pub type SizeHistogram = BTreeMap<usize, u64>;

pub struct HistogramSink {
    shards: Box<[CachePadded<Mutex<Vec<u64>>>]>,
}

impl HistogramSink {
    pub fn new() -> Self {
        Self::with_shards(default_shards())
    }

    pub fn with_shards(shards: usize) -> Self {
        let shards = shards.max(2);
        HistogramSink {
            shards: (0..shards)
                .map(|_| CachePadded::new(Mutex::new(Vec::new())))
                .collect(),
        }
    }

    pub fn histogram(&self) -> SizeHistogram {
        let mut merged = SizeHistogram::new();
        for shard in self.shards.iter() {
            let counts = shard.lock().unwrap();
            for (size, &c) in counts.iter().enumerate().filter(|(_, &c)| c > 0) {
                *merged.entry(size).or_default() += c;
            }
        }
        merged
    }
}

impl Default for HistogramSink {
    fn default() -> Self {
        Self::new()
    }
}

impl CliqueSink for HistogramSink {
    fn emit(&self, clique: &[VertexId]) {
        let mut counts = self.shards[shard_index(self.shards.len())].lock().unwrap();
        if counts.len() <= clique.len() {
            counts.resize(clique.len() + 1, 0);
        }
        counts[clique.len()] += 1;
    }
}

pub fn histogram_sink() -> HistogramSink {
    HistogramSink::new()
}

/// Keeps every emitted clique, each sorted ascending. Intended for tests and
/// small graphs.
#[derive(Default)]
pub struct CollectingSink {
    cliques: Mutex<Vec<Vec<VertexId>>>,
}

impl CollectingSink {
    pub fn new() -> Self {
        Self::default()
    }

    /// Emitted cliques in emission order, duplicates included.
    pub fn into_cliques(self) -> Vec<Vec<VertexId>> {
        self.cliques.into_inner().unwrap()
    }
}

impl CliqueSink for CollectingSink {
    fn emit(&self, clique: &[VertexId]) {
        let mut c = clique.to_vec();
        c.sort_unstable();
        self.cliques.lock().unwrap().push(c);
    }
}

struct WriterState<W> {
    out: W,
    pending: Vec<Vec<u64>>,
    error: Option<io::Error>,
}

/// Writes one clique per line as ascending, space-separated ids.
///
/// In canonical mode lines are buffered and written in lexicographic order of
/// their id sequences when the sink is finished, so the output does not
/// depend on scheduling. Write errors are held until [`WriterSink::finish`].
pub struct WriterSink<W: Write + Send> {
    state: Mutex<WriterState<W>>,
    labels: Option<Vec<u64>>,
    canonical: bool,
}

impl<W: Write + Send> WriterSink<W> {
    pub fn new(out: W, labels: Option<Vec<u64>>, canonical: bool) -> Self {
        WriterSink {
            state: Mutex::new(WriterState {
                out,
                pending: Vec::new(),
                error: None,
            }),
            labels,
            canonical,
        }
    }

    /// Flushes buffered output and returns the writer, or the first write error.
    pub fn finish(self) -> io::Result<W> {
        let WriterState {
            mut out,
            mut pending,
            error,
        } = self.state.into_inner().unwrap();
        if let Some(e) = error {
            return Err(e);
        }
        pending.sort_unstable();
        for line in &pending {
            write_line(&mut out, line)?;
        }
        out.flush()?;
        Ok(out)
    }

    fn line_for(&self, clique: &[VertexId]) -> Vec<u64> {
        let mut line: Vec<u64> = match &self.labels {
            Some(labels) => clique.iter().map(|&v| labels[v as usize]).collect(),
            None => clique.iter().map(|&v| u64::from(v)).collect(),
        };
        line.sort_unstable();
        line
    }
}

fn write_line<W: Write>(out: &mut W, line: &[u64]) -> io::Result<()> {
    let mut first = true;
    for id in line {
        if !first {
            out.write_all(b" ")?;
        }
        write!(out, "{id}")?;
        first = false;
    }
    out.write_all(b"\n")
}

impl<W: Write + Send> CliqueSink for WriterSink<W> {
    fn emit(&self, clique: &[VertexId]) {
        let line = self.line_for(clique);
        let mut state = self.state.lock().unwrap();
        if self.canonical {
            state.pending.push(line);
        } else if state.error.is_none() {
            if let Err(e) = write_line(&mut state.out, &line) {
                state.error = Some(e);
            }
        }
    }
}

/// A writer sink; with `use_original_labels` ids are translated through the
/// graph's label table.
pub fn writer_sink<W: Write + Send>(
    out: W,
    g: &Graph,
    use_original_labels: bool,
    canonical: bool,
) -> WriterSink<W> {
    let labels = use_original_labels.then(|| g.labels().to_vec());
    WriterSink::new(out, labels, canonical)
}
