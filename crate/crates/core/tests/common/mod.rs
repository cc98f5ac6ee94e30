//! Independent oracles and harness pieces shared by the integration tests.
#![allow(dead_code)]

use mce_core::enumerate::{unrolled_branch_sets, SearchObserver};
use mce_core::{
    par_mce, par_ttt, ttt, CliqueFamily, CollectingSink, Graph, ParallelConfig, RankAssignment,
    RankStrategy, Subproblem, VertexId, VertexSet,
};

/// Triangles by checking every vertex triple.
pub fn triangles_by_triples(g: &Graph) -> (u64, Vec<u64>) {
    let n = g.n() as VertexId;
    let mut total = 0;
    let mut per_vertex = vec![0u64; g.n()];
    for a in 0..n {
        for b in a + 1..n {
            if !g.is_adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.is_adjacent(a, c) && g.is_adjacent(b, c) {
                    total += 1;
                    for v in [a, b, c] {
                        per_vertex[v as usize] += 1;
                    }
                }
            }
        }
    }
    (total, per_vertex)
}

/// Core numbers by repeatedly deleting a minimum-degree vertex (O(n^2)).
/// Also returns the elimination order and each vertex's degree at removal.
pub fn naive_peeling(g: &Graph) -> (Vec<u32>, Vec<(VertexId, usize)>) {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut core = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    let mut level = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        level = level.max(degree[v]);
        core[v] = level as u32;
        order.push((v as VertexId, degree[v]));
        alive[v] = false;
        for &w in g.neighbors(v as VertexId) {
            if alive[w as usize] {
                degree[w as usize] -= 1;
            }
        }
    }
    (core, order)
}

pub fn ttt_family(g: &Graph) -> (CliqueFamily, usize) {
    let sink = CollectingSink::new();
    ttt(g, Subproblem::root(g), &sink);
    let raw = sink.into_cliques();
    let len = raw.len();
    (CliqueFamily::from_cliques(raw), len)
}

pub fn par_ttt_family(g: &Graph, cfg: &ParallelConfig) -> (CliqueFamily, usize) {
    let sink = CollectingSink::new();
    par_ttt(g, Subproblem::root(g), &sink, cfg);
    let raw = sink.into_cliques();
    let len = raw.len();
    (CliqueFamily::from_cliques(raw), len)
}

pub fn par_mce_family(
    g: &Graph,
    strategy: RankStrategy,
    cfg: &ParallelConfig,
) -> (CliqueFamily, usize) {
    let sink = CollectingSink::new();
    par_mce(g, &RankAssignment::compute(g, strategy), &sink, cfg);
    let raw = sink.into_cliques();
    let len = raw.len();
    (CliqueFamily::from_cliques(raw), len)
}

/// Replays the sequential search and, at every branch, compares the
/// incrementally maintained `(cand_q, fini_q)` with the unrolled formula
/// evaluated on the call's entry sets.
pub struct Lockstep<'g> {
    graph: &'g Graph,
    frames: Vec<(VertexSet, VertexSet, VertexSet)>,
    pub compared: usize,
    pub mismatches: Vec<String>,
}

impl<'g> Lockstep<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Lockstep {
            graph,
            frames: Vec::new(),
            compared: 0,
            mismatches: Vec::new(),
        }
    }
}

impl SearchObserver for Lockstep<'_> {
    fn on_enter(&mut self, _clique: &[VertexId], cand: &VertexSet, fini: &VertexSet) {
        self.frames
            .push((cand.clone(), fini.clone(), VertexSet::new()));
    }

    fn on_ext(&mut self, ext: &VertexSet) {
        self.frames.last_mut().unwrap().2 = ext.clone();
    }

    fn on_branch(&mut self, index: usize, q: VertexId, cand_q: &VertexSet, fini_q: &VertexSet) {
        let (cand, fini, ext) = self.frames.last().unwrap();
        self.compared += 1;
        if ext.get(index) != Some(q) {
            self.mismatches
                .push(format!("branch {index}: q={q}, ext={ext:?}"));
            return;
        }
        let (c, f) = unrolled_branch_sets(self.graph, cand, fini, ext, index);
        if (&c, &f) != (cand_q, fini_q) {
            self.mismatches.push(format!(
                "branch {index} (q={q}): incremental ({cand_q:?}, {fini_q:?}) vs unrolled ({c:?}, {f:?})"
            ));
        }
    }

    fn on_exit(&mut self) {
        self.frames.pop();
    }
}
