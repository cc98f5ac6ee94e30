//! Immutable undirected simple graphs.
//!
//! Vertices are dense ids `0..n`. Each vertex keeps an ascending neighbor
//! slice (CSR layout) and the graph keeps one membership structure answering
//! `u ∈ Γ(v)` in expected constant time: a bit matrix for graphs up to
//! [`DENSE_MEMBERSHIP_LIMIT`] vertices, a hashed edge set above that.

mod io;
mod set;

use rustc_hash::{FxHashMap, FxHashSet};

pub use io::{load_edge_list, parse_edge_list, write_edge_list};
pub use set::VertexSet;

pub type VertexId = u32;

/// Largest vertex count that uses the bit-matrix membership table (8 MiB).
pub const DENSE_MEMBERSHIP_LIMIT: usize = 8192;

#[derive(Clone)]
enum Membership {
    Bits {
        words_per_row: usize,
        bits: Vec<u64>,
    },
    Hashed(FxHashSet<u64>),
}

impl Membership {
    fn build(n: usize, offsets: &[usize], targets: &[VertexId]) -> Self {
        if n <= DENSE_MEMBERSHIP_LIMIT {
            let words_per_row = n.div_ceil(64);
            let mut bits = vec![0u64; words_per_row * n];
            for u in 0..n {
                let row = &mut bits[u * words_per_row..(u + 1) * words_per_row];
                for &v in &targets[offsets[u]..offsets[u + 1]] {
                    row[v as usize / 64] |= 1 << (v % 64);
                }
            }
            Membership::Bits {
                words_per_row,
                bits,
            }
        } else {
            let mut set = FxHashSet::default();
            set.reserve(targets.len());
            for u in 0..n {
                for &v in &targets[offsets[u]..offsets[u + 1]] {
                    set.insert(edge_key(u as VertexId, v));
                }
            }
            Membership::Hashed(set)
        }
    }

    #[inline]
    fn contains(&self, u: VertexId, v: VertexId) -> bool {
        match self {
            Membership::Bits {
                words_per_row,
                bits,
            } => {
                let word = bits[u as usize * words_per_row + v as usize / 64];
                word & (1 << (v % 64)) != 0
            }
            Membership::Hashed(set) => set.contains(&edge_key(u, v)),
        }
    }
}

#[inline]
fn edge_key(u: VertexId, v: VertexId) -> u64 {
    (u64::from(u) << 32) | u64::from(v)
}

#[derive(Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    membership: Membership,
    labels: Vec<u64>,
    label_index: FxHashMap<u64, VertexId>,
}

impl Graph {
    /// Builds a graph on `0..n` from an arbitrary edge list.
    ///
    /// Self-loops are dropped, and duplicate or reversed edges are merged.
    /// Vertex labels default to the dense ids.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::with_labels((0..n as u64).collect(), edges)
    }

    /// Like [`Graph::from_edges`], with `labels[v]` the original label of `v`.
    pub fn with_labels<I>(labels: Vec<u64>, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let n = labels.len();
        assert!(n <= VertexId::MAX as usize, "too many vertices");
        let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for {n} vertices"
            );
            if u != v {
                adjacency[u as usize].push(v);
                adjacency[v as usize].push(u);
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        drop(adjacency);

        let membership = Membership::build(n, &offsets, &targets);
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(id, &label)| (label, id as VertexId))
            .collect();
        Graph {
            offsets,
            targets,
            membership,
            labels,
            label_index,
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        0..self.n() as VertexId
    }

    /// Ascending neighbors of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.membership.contains(u, v)
    }

    /// Every undirected edge once, as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// `s ∩ Γ(v)`, probing the smaller side against the larger side.
    pub fn intersect_with_neighbors(&self, s: &VertexSet, v: VertexId) -> VertexSet {
        let nbrs = self.neighbors(v);
        if s.len() <= nbrs.len() {
            s.filter(|w| self.is_adjacent(v, w))
        } else {
            VertexSet::from_sorted(nbrs.iter().copied().filter(|&w| s.contains(w)).collect())
        }
    }

    /// `|s ∩ Γ(v)|` without materializing the intersection.
    pub fn count_common(&self, s: &[VertexId], v: VertexId) -> usize {
        let nbrs = self.neighbors(v);
        if s.len() <= nbrs.len() {
            s.iter().filter(|&&w| self.is_adjacent(v, w)).count()
        } else {
            nbrs.iter().filter(|w| s.binary_search(w).is_ok()).count()
        }
    }

    /// Original label of dense vertex `v`.
    #[inline]
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v as usize]
    }

    /// Dense id → original label, indexed by dense id.
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Dense id for an original label, if the label occurs in the graph.
    pub fn dense_id(&self, label: u64) -> Option<VertexId> {
        self.label_index.get(&label).copied()
    }

    /// `true` if every pair of `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[VertexId]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.is_adjacent(u, v)))
    }

    /// `true` if `vertices` is a clique and no other vertex is adjacent to all of it.
    pub fn is_maximal_clique(&self, vertices: &[VertexId]) -> bool {
        if !self.is_clique(vertices) {
            return false;
        }
        match vertices.first() {
            None => self.n() == 0,
            Some(&first) => !self.neighbors(first).iter().any(|&w| {
                !vertices.contains(&w) && vertices.iter().all(|&k| self.is_adjacent(k, w))
            }),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.offsets == other.offsets && self.targets == other.targets
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .finish_non_exhaustive()
    }
}
