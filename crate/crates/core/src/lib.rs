//! Maximal clique enumeration on shared-memory machines.
//!
//! Three engines share one graph representation and one output contract:
//!
//! * [`ttt`] is the sequential pivoting backtracking search.
//! * [`par_ttt`] runs the same search with every branch of a call spawned as an
//!   independent task. The `cand`/`fini` sets of branch `i` are computed
//!   directly from the branch order instead of incrementally.
//! * [`par_mce`] splits the graph into one subproblem per vertex and uses a
//!   [`RankAssignment`] so that every maximal clique is reported only by its
//!   lowest-ranked member.
//!
//! Emitted cliques flow into a [`CliqueSink`]; sinks are safe to call from
//! many tasks at once.
//!
//! ```
//! use mce_core::{counting_sink, gen_moon_moser, par_mce, ParallelConfig, RankAssignment, RankStrategy};
//!
//! let g = gen_moon_moser(6);
//! let rank = RankAssignment::compute(&g, RankStrategy::Degeneracy);
//! let sink = counting_sink();
//! par_mce(&g, &rank, &sink, &ParallelConfig::new(4));
//! assert_eq!(sink.count(), 729);
//! ```

pub mod driver;
pub mod enumerate;
mod error;
pub mod graph;
pub mod pivot;
pub mod ranking;
pub mod report;
pub mod sink;
pub mod testlab;

pub use enumerate::{par_mce, par_ttt, subproblem_for_vertex, ttt, ParallelConfig, Subproblem};
pub use error::{Error, Result};
pub use graph::{load_edge_list, parse_edge_list, write_edge_list, Graph, VertexId, VertexSet};
pub use pivot::{par_pivot, select_pivot, PivotScore};
pub use ranking::{
    degeneracy_rank, degree_rank, rank_less, triangle_counts, RankAssignment, RankStrategy,
};
pub use report::EnumerationReport;
pub use sink::{
    counting_sink, histogram_sink, writer_sink, CliqueSink, CollectingSink, CountingSink,
    HistogramSink, WriterSink,
};
pub use testlab::{brute_force_mce, gen_complete, gen_gnp, gen_moon_moser, CliqueFamily};
