//! Vertex rankings for per-vertex decomposition.
//!
//! A ranking assigns each vertex an integer metric and orders vertices by
//! `(metric, id)`. The id tie-break makes the order strict and total, which
//! is what lets [`crate::par_mce`] report each clique from exactly one
//! subproblem. All rankings are computed sequentially.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankStrategy {
    Degree,
    Triangle,
    Degeneracy,
}

impl RankStrategy {
    pub const ALL: [RankStrategy; 3] = [
        RankStrategy::Degree,
        RankStrategy::Triangle,
        RankStrategy::Degeneracy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RankStrategy::Degree => "degree",
            RankStrategy::Triangle => "triangle",
            RankStrategy::Degeneracy => "degeneracy",
        }
    }
}

impl fmt::Display for RankStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RankStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "degree" => Ok(RankStrategy::Degree),
            "triangle" => Ok(RankStrategy::Triangle),
            "degeneracy" => Ok(RankStrategy::Degeneracy),
            other => Err(Error::Config(format!(
                "unknown ordering `{other}` (expected degree, triangle or degeneracy)"
            ))),
        }
    }
}

/// Per-vertex metric values and the strict total order they induce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankAssignment {
    strategy: RankStrategy,
    values: Vec<u64>,
}

impl RankAssignment {
    pub fn compute(g: &Graph, strategy: RankStrategy) -> Self {
        match strategy {
            RankStrategy::Degree => degree_rank(g),
            RankStrategy::Triangle => triangle_counts(g),
            RankStrategy::Degeneracy => degeneracy_rank(g),
        }
    }

    /// Wraps precomputed metric values.
    pub fn from_values(strategy: RankStrategy, values: Vec<u64>) -> Self {
        RankAssignment { strategy, values }
    }

    pub fn strategy(&self) -> RankStrategy {
        self.strategy
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, v: VertexId) -> u64 {
        self.values[v as usize]
    }

    /// The sort key `(value, id)`.
    #[inline]
    pub fn key(&self, v: VertexId) -> (u64, VertexId) {
        (self.values[v as usize], v)
    }

    /// `true` iff `u` ranks strictly below `v`.
    #[inline]
    pub fn less(&self, u: VertexId, v: VertexId) -> bool {
        self.key(u) < self.key(v)
    }

    /// Vertices in ascending rank order.
    pub fn order(&self) -> Vec<VertexId> {
        let mut order: Vec<VertexId> = (0..self.values.len() as VertexId).collect();
        order.sort_unstable_by_key(|&v| self.key(v));
        order
    }
}

/// `true` iff `(value[u], u) < (value[v], v)`.
pub fn rank_less(rank: &RankAssignment, u: VertexId, v: VertexId) -> bool {
    rank.less(u, v)
}

pub fn degree_rank(g: &Graph) -> RankAssignment {
    let values = g.vertices().map(|v| g.degree(v) as u64).collect();
    RankAssignment::from_values(RankStrategy::Degree, values)
}

/// Number of triangles through each vertex.
///
/// Each edge `(u, v)` contributes `|Γ(u) ∩ Γ(v)|` to both endpoints. A
/// triangle is seen from the two edges incident to each of its corners, so
/// the accumulated totals are halved.
pub fn triangle_counts(g: &Graph) -> RankAssignment {
    let mut twice = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        let common = g.count_common(g.neighbors(u), v) as u64;
        twice[u as usize] += common;
        twice[v as usize] += common;
    }
    let values = twice.into_iter().map(|t| t / 2).collect();
    RankAssignment::from_values(RankStrategy::Triangle, values)
}

pub fn degeneracy_rank(g: &Graph) -> RankAssignment {
    let values = core_numbers(g).into_iter().map(u64::from).collect();
    RankAssignment::from_values(RankStrategy::Degeneracy, values)
}

/// Core number of every vertex, by O(n + m) bucket peeling: vertices are kept
/// sorted by remaining degree and the minimum is removed repeatedly.
pub fn core_numbers(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // bin_start[d]: first slot of degree-d vertices in `order`
    let mut bin_start = vec![0usize; max_degree + 1];
    for &d in &degree {
        bin_start[d] += 1;
    }
    let mut start = 0;
    for slot in bin_start.iter_mut() {
        let count = *slot;
        *slot = start;
        start += count;
    }

    let mut position = vec![0usize; n];
    let mut order = vec![0 as VertexId; n];
    {
        let mut next = bin_start.clone();
        for v in 0..n {
            position[v] = next[degree[v]];
            order[position[v]] = v as VertexId;
            next[degree[v]] += 1;
        }
    }

    for i in 0..n {
        let v = order[i] as usize;
        for &u in g.neighbors(v as VertexId) {
            let u = u as usize;
            if degree[u] > degree[v] {
                let du = degree[u];
                let first = bin_start[du];
                let w = order[first] as usize;
                if u != w {
                    order.swap(position[u], first);
                    position[w] = position[u];
                    position[u] = first;
                }
                bin_start[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    degree.into_iter().map(|d| d as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testlab::gen_complete;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n as VertexId).map(|v| (v - 1, v)))
    }

    fn star(leaves: VertexId) -> Graph {
        Graph::from_edges(leaves as usize + 1, (1..=leaves).map(|v| (0, v)))
    }

    #[test]
    fn degree_examples() {
        let r = degree_rank(&path(3));
        assert_eq!(r.values(), &[1, 2, 1]);
        assert_eq!(r.order(), vec![0, 2, 1]);

        let r = degree_rank(&gen_complete(4));
        assert_eq!(r.values(), &[3, 3, 3, 3]);
        assert_eq!(r.order(), vec![0, 1, 2, 3]);

        let r = degree_rank(&star(4));
        assert_eq!(r.values(), &[4, 1, 1, 1, 1]);
        assert_eq!(r.order(), vec![1, 2, 3, 4, 0]);
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(triangle_counts(&gen_complete(4)).values(), &[3, 3, 3, 3]);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(triangle_counts(&c4).values(), &[0, 0, 0, 0]);
        // K4 minus {0,1}: triangles {0,2,3} and {1,2,3}
        let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(triangle_counts(&g).values(), &[1, 1, 2, 2]);
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_rank(&path(4)).values(), &[1, 1, 1, 1]);
        assert_eq!(degeneracy_rank(&gen_complete(4)).values(), &[3, 3, 3, 3]);
        let mut edges: Vec<_> = gen_complete(4).edges().collect();
        edges.push((0, 4));
        let g = Graph::from_edges(5, edges);
        assert_eq!(degeneracy_rank(&g).values(), &[3, 3, 3, 3, 1]);
        assert_eq!(core_numbers(&Graph::from_edges(2, [])), vec![0, 0]);
        assert!(core_numbers(&Graph::from_edges(0, [])).is_empty());
    }

    #[test]
    fn rank_less_examples() {
        let r = RankAssignment::from_values(RankStrategy::Degree, vec![1, 2, 1]);
        assert!(rank_less(&r, 0, 2));
        assert!(!rank_less(&r, 1, 0));
        let r = RankAssignment::from_values(RankStrategy::Degree, vec![5, 3]);
        assert!(rank_less(&r, 1, 0));
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in RankStrategy::ALL {
            assert_eq!(s.name().parse::<RankStrategy>().unwrap(), s);
        }
        assert!("pagerank".parse::<RankStrategy>().is_err());
    }
}
