use core::cmp::Ordering;
use core::fmt;

use alloc::vec::Vec;

use crate::bits::Bits;
use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PointSetError {
    #[error("point {point} is outside the vertex range 0..{n}")]
    OutOfRange { point: Vertex, n: usize },
    #[error("point {0} is listed more than once")]
    Duplicate(Vertex),
}

/// A set of points over the vertices `0..n` of a host graph.
///
/// Membership is a bitmask; the cardinality is cached. Ordering is the
/// lexicographic order of the ascending member lists, so the minimum of a
/// family of equal-size sets is its lexicographically least member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    mask: Bits,
    n: usize,
    len: usize,
}

impl PointSet {
    /// The empty set over `0..n`.
    pub fn new(n: usize) -> Self {
        PointSet {
            mask: Bits::new(n),
            n,
            len: 0,
        }
    }

    /// Every vertex of `0..n`.
    pub fn full(n: usize) -> Self {
        PointSet {
            mask: Bits::full(n),
            n,
            len: n,
        }
    }

    /// Builds a set from a list of distinct ids, rejecting repeats.
    pub fn from_points(
        n: usize,
        points: impl IntoIterator<Item = Vertex>,
    ) -> Result<Self, PointSetError> {
        let mut set = PointSet::new(n);
        for p in points {
            if p >= n {
                return Err(PointSetError::OutOfRange { point: p, n });
            }
            if !set.insert(p) {
                return Err(PointSetError::Duplicate(p));
            }
        }
        Ok(set)
    }

    /// Like [`PointSet::from_points`] but silently merges repeats.
    pub fn collect(n: usize, points: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = PointSet::new(n);
        for p in points {
            set.insert(p);
        }
        set
    }

    /// Size of the vertex universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// If `v` is outside the universe.
    pub fn contains(&self, v: Vertex) -> bool {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        self.mask.contains(v)
    }

    /// Returns `true` if `v` was not already present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        let fresh = self.mask.insert(v);
        self.len += fresh as usize;
        fresh
    }

    /// Returns `true` if `v` was present.
    pub fn remove(&mut self, v: Vertex) -> bool {
        assert!(v < self.n, "vertex {v} outside universe 0..{}", self.n);
        let was = self.mask.remove(v);
        self.len -= was as usize;
        was
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.mask.iter()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.n == other.n && self.mask.is_subset(&other.mask)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> PointSet {
        let mut mask = Bits::full(self.n);
        mask.difference_with(&self.mask);
        PointSet {
            mask,
            n: self.n,
            len: self.n - self.len,
        }
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
