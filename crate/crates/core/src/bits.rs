//! Fixed-width bit rows in 64-bit blocks.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub(crate) const BLOCK: usize = 64;

#[inline]
pub(crate) const fn blocks_for(n: usize) -> usize {
    n.div_ceil(BLOCK)
}

#[inline]
pub(crate) fn test_bit(row: &[u64], i: usize) -> bool {
    row[i / BLOCK] >> (i % BLOCK) & 1 == 1
}

#[inline]
pub(crate) fn set_bit(row: &mut [u64], i: usize) {
    row[i / BLOCK] |= 1 << (i % BLOCK);
}

#[inline]
pub(crate) fn clear_bit(row: &mut [u64], i: usize) {
    row[i / BLOCK] &= !(1 << (i % BLOCK));
}

/// Mask of the valid bits in block `b` of an `n`-bit row.
#[inline]
pub(crate) fn block_mask(n: usize, b: usize) -> u64 {
    let lo = b * BLOCK;
    if n >= lo + BLOCK {
        u64::MAX
    } else if n <= lo {
        0
    } else {
        (1u64 << (n - lo)) - 1
    }
}

#[inline]
pub(crate) fn popcount(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Ascending iterator over the set bits of a row.
pub(crate) struct Ones<'a> {
    row: &'a [u64],
    block: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(row: &'a [u64]) -> Self {
        Ones {
            row,
            block: 0,
            cur: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.block * BLOCK + t);
            }
            self.block += 1;
            if self.block >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.block];
        }
    }
}

/// A subset of `{0, .., universe-1}`.
///
/// Iteration is always in ascending order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; blocks_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (b, w) in s.blocks.iter_mut().enumerate() {
            *w = block_mask(universe, b);
        }
        s
    }

    /// Builds a set from members; fails on any member `>= universe`.
    pub fn from_members<I>(universe: usize, members: I) -> crate::Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(crate::Error::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_blocks(universe: usize, blocks: Vec<u64>) -> Self {
        debug_assert_eq!(blocks.len(), blocks_for(universe));
        VertexSet { universe, blocks }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && test_bit(&self.blocks, v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        set_bit(&mut self.blocks, v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            clear_bit(&mut self.blocks, v);
        }
    }

    pub fn len(&self) -> usize {
        popcount(&self.blocks)
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        Ones::new(&self.blocks)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| f(a, b))
            .collect();
        VertexSet::from_blocks(self.universe, blocks)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
