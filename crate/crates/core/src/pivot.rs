//! Pivot selection: the vertex of `cand ∪ fini` with the most neighbors in `cand`.
//!
//! Ties go to the smallest vertex id. Both paths use the same total order on
//! [`PivotScore`], so the parallel reduction returns exactly the sequential answer.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PivotScore {
    pub vertex: VertexId,
    /// `|cand ∩ Γ(vertex)|`
    pub t: usize,
}

impl PivotScore {
    /// Larger `t` wins; on equal `t` the smaller id wins.
    fn preference(&self, other: &Self) -> Ordering {
        self.t
            .cmp(&other.t)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }

    fn best(self, other: Self) -> Self {
        match self.preference(&other) {
            Ordering::Less => other,
            _ => self,
        }
    }
}

#[inline]
fn score(g: &Graph, cand: &VertexSet, w: VertexId) -> PivotScore {
    PivotScore {
        vertex: w,
        t: g.count_common(cand.as_slice(), w),
    }
}

/// Sequential pivot selection. Panics if `cand` and `fini` are both empty.
pub fn select_pivot(g: &Graph, cand: &VertexSet, fini: &VertexSet) -> PivotScore {
    cand.iter()
        .chain(fini.iter())
        .map(|w| score(g, cand, w))
        .reduce(PivotScore::best)
        .expect("pivot requested for an empty cand ∪ fini")
}

/// Parallel pivot selection: every `t_w` is computed as its own task and the
/// argmax is a tree reduction. Returns the same result as [`select_pivot`].
pub fn par_pivot(g: &Graph, cand: &VertexSet, fini: &VertexSet) -> PivotScore {
    cand.as_slice()
        .par_iter()
        .chain(fini.as_slice().par_iter())
        .map(|&w| score(g, cand, w))
        .reduce_with(PivotScore::best)
        .expect("pivot requested for an empty cand ∪ fini")
}
