//! Fixed-universe vertex sets backed by `u64` bit blocks.

use std::fmt;

/// A subset of the vertices `0..n` of one graph.
///
/// Bits beyond the universe size are always zero, so equality and hashing
/// work block-wise, and the cardinality is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
    len: usize,
}

fn block_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; block_count(universe)],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut blocks = vec![u64::MAX; block_count(universe)];
        if !universe.is_multiple_of(64) {
            if let Some(last) = blocks.last_mut() {
                *last = (1u64 << (universe % 64)) - 1;
            }
        }
        VertexSet {
            universe,
            blocks,
            len: universe,
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        let mut s = VertexSet::empty(universe);
        for v in ids {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.universe);
        self.blocks[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let mask = 1u64 << (v % 64);
        let fresh = self.blocks[v / 64] & mask == 0;
        self.blocks[v / 64] |= mask;
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        assert!(v < self.universe);
        let mask = 1u64 << (v % 64);
        let present = self.blocks[v / 64] & mask != 0;
        self.blocks[v / 64] &= !mask;
        self.len -= present as usize;
        present
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_blocks(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_blocks(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_blocks(other, |a, b| a & !b)
    }

    fn zip_blocks(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let blocks: Vec<u64> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| f(a, b))
            .collect();
        let len = blocks.iter().map(|b| b.count_ones() as usize).sum();
        VertexSet {
            universe: self.universe,
            blocks,
            len,
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_strict_subset_of(&self, other: &VertexSet) -> bool {
        self.len < other.len && self.is_subset_of(other)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.blocks.iter().zip(&other.blocks).all(|(&a, &b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            std::iter::successors(
                (block != 0).then_some(block),
                |&b| {
                    let next = b & (b - 1);
                    (next != 0).then_some(next)
                },
            )
            .map(move |b| i * 64 + b.trailing_zeros() as usize)
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects ids into a set whose universe is one past the largest id.
    /// Mostly a test convenience; prefer [`VertexSet::from_ids`] when the
    /// universe is known.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let ids: Vec<usize> = iter.into_iter().collect();
        let universe = ids.iter().max().map_or(0, |&m| m + 1);
        VertexSet::from_ids(universe, ids)
    }
}
