use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use super::VertexId;

/// An ascending, duplicate-free set of dense vertex ids.
///
/// Iteration order is always ascending id, which keeps branch order (and
/// therefore every trace of the search) deterministic.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn with_capacity(capacity: usize) -> Self {
        VertexSet(Vec::with_capacity(capacity))
    }

    /// Wraps a vector that is already strictly ascending.
    pub fn from_sorted(ids: Vec<VertexId>) -> Self {
        debug_assert!(
            ids.windows(2).all(|w| w[0] < w[1]),
            "vertex ids must be strictly ascending"
        );
        VertexSet(ids)
    }

    /// The full range `0..n`.
    pub fn range(n: usize) -> Self {
        VertexSet((0..n as VertexId).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Option<VertexId> {
        self.0.get(i).copied()
    }

    #[inline]
    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, VertexId>> {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    /// Inserts `v`, keeping the order. Returns false if it was present.
    pub fn insert(&mut self, v: VertexId) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    /// Removes `v`. Returns false if it was absent.
    pub fn remove(&mut self, v: VertexId) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Keeps the elements for which `keep` returns true.
    pub fn filter(&self, mut keep: impl FnMut(VertexId) -> bool) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| keep(v)).collect())
    }

    /// `self \ other`, by a linear merge.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                Ordering::Greater => j += 1,
            }
        }
        VertexSet(out)
    }

    /// `self ∪ other`, by a linear merge.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().all(|v| !large.contains(v))
    }
}

impl Index<usize> for VertexSet {
    type Output = VertexId;

    fn index(&self, i: usize) -> &VertexId {
        &self.0[i]
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut ids: Vec<VertexId> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl From<VertexSet> for Vec<VertexId> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}
