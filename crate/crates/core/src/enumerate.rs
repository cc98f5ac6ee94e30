//! The enumeration engines.
//!
//! Every engine works on a [`Subproblem`] `(K, cand, fini)`: it reports each
//! maximal clique that contains `K`, extends it only with vertices of `cand`,
//! and contains no vertex of `fini`. A call whose `cand` and `fini` are both
//! empty reports `K`, unless `K` is empty (a graph without vertices has no
//! maximal cliques).
//!
//! Branches of a call are the vertices of `ext = cand \ Γ(pivot)`, taken in
//! ascending id order. [`ttt`] updates `cand`/`fini` after each branch;
//! [`par_ttt`] computes the sets of branch `i` directly from `ext[..i]` so all
//! branches are independent tasks; [`par_mce`] starts one such search per
//! vertex.

use rayon::prelude::*;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::pivot::{par_pivot, select_pivot};
use crate::ranking::RankAssignment;
use crate::sink::CliqueSink;

/// Default `|cand|` below which a parallel search continues sequentially.
pub const DEFAULT_CUTOFF: usize = 16;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subproblem {
    /// The clique being extended.
    pub clique: Vec<VertexId>,
    pub cand: VertexSet,
    pub fini: VertexSet,
}

impl Subproblem {
    /// `K = ∅`, `cand = V`, `fini = ∅`.
    pub fn root(g: &Graph) -> Self {
        Subproblem {
            clique: Vec::new(),
            cand: VertexSet::range(g.n()),
            fini: VertexSet::new(),
        }
    }

    /// Checks that `K`, `cand`, `fini` are pairwise disjoint, that `K` is a
    /// clique, and that every vertex of `cand ∪ fini` is adjacent to all of `K`.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        check_state(g, &self.clique, &self.cand, &self.fini)
    }
}

fn check_state(
    g: &Graph,
    clique: &[VertexId],
    cand: &VertexSet,
    fini: &VertexSet,
) -> Result<(), String> {
    if !cand.is_disjoint(fini) {
        return Err(format!("cand {cand:?} and fini {fini:?} overlap"));
    }
    if let Some(k) = clique
        .iter()
        .find(|&&k| cand.contains(k) || fini.contains(k))
    {
        return Err(format!("clique member {k} also in cand or fini"));
    }
    if !g.is_clique(clique) {
        return Err(format!("{clique:?} is not a clique"));
    }
    for w in cand.iter().chain(fini.iter()) {
        if let Some(k) = clique.iter().find(|&&k| !g.is_adjacent(k, w)) {
            return Err(format!("{w} is not adjacent to clique member {k}"));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParallelConfig {
    /// Worker threads; at least 1.
    pub threads: usize,
    /// Searches whose `cand` is smaller than this run sequentially.
    pub cutoff: usize,
}

impl ParallelConfig {
    pub fn new(threads: usize) -> Self {
        ParallelConfig {
            threads: threads.max(1),
            cutoff: DEFAULT_CUTOFF,
        }
    }

    pub fn with_cutoff(mut self, cutoff: usize) -> Self {
        self.cutoff = cutoff;
        self
    }

    /// Runs `op` on a dedicated pool with `threads` workers.
    pub fn install<R, F>(&self, op: F) -> R
    where
        R: Send,
        F: FnOnce() -> R + Send,
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads.max(1))
            .build()
            .expect("failed to start worker threads")
            .install(op)
    }
}

impl Default for ParallelConfig {
    fn default() -> Self {
        Self::new(std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

/// Hooks into the sequential search. All methods default to no-ops.
pub trait SearchObserver {
    /// Start of every call.
    fn on_enter(&mut self, _clique: &[VertexId], _cand: &VertexSet, _fini: &VertexSet) {}
    /// The branch vertices of a call that did not return immediately.
    fn on_ext(&mut self, _ext: &VertexSet) {}
    /// Branch `index` on vertex `q`, with the sets passed to the child call.
    fn on_branch(&mut self, _index: usize, _q: VertexId, _cand_q: &VertexSet, _fini_q: &VertexSet) {
    }
    /// End of every call.
    fn on_exit(&mut self) {}
}

struct Silent;

impl SearchObserver for Silent {}

/// Validates subproblem invariants at every call and records the deepest `|K|`.
pub struct InvariantCheck<'g> {
    graph: &'g Graph,
    pub violations: Vec<String>,
    pub calls: usize,
    pub max_depth: usize,
}

impl<'g> InvariantCheck<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        InvariantCheck {
            graph,
            violations: Vec::new(),
            calls: 0,
            max_depth: 0,
        }
    }
}

impl SearchObserver for InvariantCheck<'_> {
    fn on_enter(&mut self, clique: &[VertexId], cand: &VertexSet, fini: &VertexSet) {
        self.calls += 1;
        self.max_depth = self.max_depth.max(clique.len());
        if let Err(e) = check_state(self.graph, clique, cand, fini) {
            self.violations.push(e);
        }
    }
}

/// `cand \ Γ(pivot)` in ascending order.
pub fn ext_array(g: &Graph, cand: &VertexSet, pivot: VertexId) -> VertexSet {
    cand.filter(|v| !g.is_adjacent(pivot, v))
}

/// The `(cand, fini)` pair handed to branch `index` of a call, computed
/// without reference to earlier branches:
///
/// * `cand_i = (cand \ ext[..i]) ∩ Γ(ext[i])`
/// * `fini_i = (fini ∪ ext[..i]) ∩ Γ(ext[i])`
///
/// The intersection with `Γ(ext[i])` is taken first and the result is then
/// filtered against the prefix `ext[..i]`.
pub fn unrolled_branch_sets(
    g: &Graph,
    cand: &VertexSet,
    fini: &VertexSet,
    ext: &VertexSet,
    index: usize,
) -> (VertexSet, VertexSet) {
    let q = ext[index];
    let prefix = &ext.as_slice()[..index];
    let in_prefix = |v: VertexId| v < q && prefix.binary_search(&v).is_ok();

    let cand_q = g
        .intersect_with_neighbors(cand, q)
        .filter(|v| !in_prefix(v));
    let prefix_q = VertexSet::from_sorted(
        prefix
            .iter()
            .copied()
            .filter(|&v| g.is_adjacent(q, v))
            .collect(),
    );
    let fini_q = g.intersect_with_neighbors(fini, q).union(&prefix_q);
    (cand_q, fini_q)
}

fn ttt_rec<S, O>(
    g: &Graph,
    clique: &mut Vec<VertexId>,
    mut cand: VertexSet,
    mut fini: VertexSet,
    sink: &S,
    obs: &mut O,
) where
    S: CliqueSink + ?Sized,
    O: SearchObserver,
{
    obs.on_enter(clique, &cand, &fini);
    if cand.is_empty() {
        if fini.is_empty() && !clique.is_empty() {
            sink.emit(clique);
        }
        obs.on_exit();
        return;
    }

    let pivot = select_pivot(g, &cand, &fini).vertex;
    let ext = ext_array(g, &cand, pivot);
    obs.on_ext(&ext);

    for (i, q) in ext.iter().enumerate() {
        let cand_q = g.intersect_with_neighbors(&cand, q);
        let fini_q = g.intersect_with_neighbors(&fini, q);
        obs.on_branch(i, q, &cand_q, &fini_q);

        clique.push(q);
        ttt_rec(g, clique, cand_q, fini_q, sink, obs);
        clique.pop();

        cand.remove(q);
        fini.insert(q);
    }
    obs.on_exit();
}

/// Sequential pivoting search over `sp`.
pub fn ttt<S: CliqueSink + ?Sized>(g: &Graph, sp: Subproblem, sink: &S) {
    ttt_observed(g, sp, sink, &mut Silent);
}

/// [`ttt`] with an observer attached.
pub fn ttt_observed<S, O>(g: &Graph, sp: Subproblem, sink: &S, obs: &mut O)
where
    S: CliqueSink + ?Sized,
    O: SearchObserver,
{
    let Subproblem {
        mut clique,
        cand,
        fini,
    } = sp;
    ttt_rec(g, &mut clique, cand, fini, sink, obs);
}

fn par_ttt_rec<S: CliqueSink + ?Sized>(
    g: &Graph,
    mut clique: Vec<VertexId>,
    cand: VertexSet,
    fini: VertexSet,
    sink: &S,
    cutoff: usize,
) {
    if cand.is_empty() {
        if fini.is_empty() && !clique.is_empty() {
            sink.emit(&clique);
        }
        return;
    }
    if cand.len() < cutoff {
        ttt_rec(g, &mut clique, cand, fini, sink, &mut Silent);
        return;
    }

    let pivot = par_pivot(g, &cand, &fini).vertex;
    let ext = ext_array(g, &cand, pivot);

    ext.as_slice().par_iter().enumerate().for_each(|(i, &q)| {
        let (cand_q, fini_q) = unrolled_branch_sets(g, &cand, &fini, &ext, i);
        let mut child = Vec::with_capacity(clique.len() + 1);
        child.extend_from_slice(&clique);
        child.push(q);
        par_ttt_rec(g, child, cand_q, fini_q, sink, cutoff);
    });
}

/// Parallel search over `sp`: every branch of a call is an independent task,
/// recursively, until `|cand|` drops below `cfg.cutoff`.
pub fn par_ttt<S: CliqueSink + ?Sized>(g: &Graph, sp: Subproblem, sink: &S, cfg: &ParallelConfig) {
    let Subproblem { clique, cand, fini } = sp;
    cfg.install(|| par_ttt_rec(g, clique, cand, fini, sink, cfg.cutoff));
}

/// `({v}, {w ∈ Γ(v) : w ranks above v}, {w ∈ Γ(v) : w ranks below v})`.
pub fn subproblem_for_vertex(g: &Graph, rank: &RankAssignment, v: VertexId) -> Subproblem {
    let (higher, lower): (Vec<VertexId>, Vec<VertexId>) =
        g.neighbors(v).iter().partition(|&&w| rank.less(v, w));
    Subproblem {
        clique: vec![v],
        cand: VertexSet::from_sorted(higher),
        fini: VertexSet::from_sorted(lower),
    }
}

/// Per-vertex decomposition: one parallel search per vertex, scheduled
/// dynamically. A clique is reported only by the subproblem of its
/// lowest-ranked vertex.
///
/// The searches run against the whole graph; since every set below the root
/// of a subproblem is already inside `Γ(v)`, no induced subgraph is built.
pub fn par_mce<S: CliqueSink + ?Sized>(
    g: &Graph,
    rank: &RankAssignment,
    sink: &S,
    cfg: &ParallelConfig,
) {
    assert_eq!(rank.values().len(), g.n(), "ranking does not match graph");
    cfg.install(|| {
        (0..g.n() as VertexId).into_par_iter().for_each(|v| {
            let Subproblem { clique, cand, fini } = subproblem_for_vertex(g, rank, v);
            par_ttt_rec(g, clique, cand, fini, sink, cfg.cutoff);
        })
    });
}
