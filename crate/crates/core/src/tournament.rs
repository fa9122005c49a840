//! Canonical tournament representation.
//!
//! Row `u` is the out-neighbourhood of `u`: bit `v` is set iff `u → v`.
//! Rows are stored back to back in 64-bit blocks, so a whole out- or
//! in-neighbourhood intersection is a handful of `AND` + `popcount`s.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{self, blocks_for, block_mask, Ones};
use crate::{Error, Result, VertexSet};

/// Largest order accepted by [`Tournament::is_isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 12;

/// A complete oriented graph on `n >= 1` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Result of [`Tournament::neighborhoods`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighborhoods {
    pub outset: VertexSet,
    pub inset: VertexSet,
    pub outdeg: usize,
    pub indeg: usize,
}

/// The unique transmitter and receiver, when present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialVertices {
    pub transmitter: Option<usize>,
    pub receiver: Option<usize>,
}

/// Strong components `T_1, .., T_m`, ordered so that every vertex of an
/// earlier component beats every vertex of a later one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongDecomposition {
    pub components: Vec<Vec<usize>>,
}

impl StrongDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_strong(&self) -> bool {
        self.components.len() == 1
    }

    pub fn initial(&self) -> &[usize] {
        &self.components[0]
    }

    pub fn terminal(&self) -> &[usize] {
        &self.components[self.components.len() - 1]
    }
}

impl Tournament {
    /// Checks every tournament invariant on the given out-rows.
    pub fn validate(n: usize, rows: &[VertexSet]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        if let Some(r) = rows.iter().find(|r| r.universe() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.universe(),
            });
        }
        for (u, r) in rows.iter().enumerate() {
            if r.contains(u) {
                return Err(Error::SelfLoop(u));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if rows[u].contains(v) == rows[v].contains(u) {
                    return Err(Error::MissingOrDoubleArc(u, v));
                }
            }
        }
        let words = blocks_for(n);
        let mut flat = Vec::with_capacity(n * words);
        for r in rows {
            flat.extend_from_slice(r.blocks());
        }
        Ok(Tournament {
            n,
            words,
            rows: flat,
        })
    }

    /// Validates an arc list; every unordered pair must appear exactly once.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if rows[u].contains(v) || rows[v].contains(u) {
                return Err(Error::MissingOrDoubleArc(u.min(v), u.max(v)));
            }
            rows[u].insert(v);
        }
        Self::validate(n, &rows)
    }

    /// Orients each pair `u < v` as `u → v` iff `forward(u, v)`.
    ///
    /// Panics if `n == 0`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(n >= 1, "a tournament needs at least one vertex");
        let words = blocks_for(n);
        let mut rows = vec![0u64; n * words];
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = if forward(u, v) { (u, v) } else { (v, u) };
                bits::set_bit(&mut rows[a * words..(a + 1) * words], b);
            }
        }
        Tournament { n, words, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// `true` iff `u → v`. Panics if either vertex is out of range.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        bits::test_bit(self.row(u), v)
    }

    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet::from_blocks(self.n, self.row(v).to_vec())
    }

    pub fn in_set(&self, v: usize) -> VertexSet {
        let blocks = (0..self.words)
            .map(|b| !self.row(v)[b] & block_mask(self.n, b))
            .collect();
        let mut s = VertexSet::from_blocks(self.n, blocks);
        s.remove(v);
        s
    }

    pub fn out_degree(&self, v: usize) -> usize {
        bits::popcount(self.row(v))
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.n - 1 - self.out_degree(v)
    }

    pub fn neighborhoods(&self, v: usize) -> Result<Neighborhoods> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let outset = self.out_set(v);
        let inset = self.in_set(v);
        Ok(Neighborhoods {
            outdeg: outset.len(),
            indeg: inset.len(),
            outset,
            inset,
        })
    }

    /// Out-degrees indexed by vertex.
    pub fn scores(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.out_degree(v)).collect()
    }

    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn min_in_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.out_degree(0);
        (1..self.n).all(|v| self.out_degree(v) == d)
    }

    /// All arcs `(u, v)` in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Ones::new(self.row(u)).map(move |v| (u, v)))
    }

    /// The reversal `T^r`.
    pub fn dual(&self) -> Tournament {
        Tournament::from_fn(self.n, |u, v| self.beats(v, u))
    }

    /// Sub-tournament on `keep`, relabeled `0..|keep|` in ascending order of
    /// the original labels.
    pub fn induced<I>(&self, keep: I) -> Result<Tournament>
    where
        I: IntoIterator<Item = usize>,
    {
        let keep = VertexSet::from_members(self.n, keep)?.to_vec();
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Tournament::from_fn(keep.len(), |i, j| {
            self.beats(keep[i], keep[j])
        }))
    }

    /// `T - removed`.
    pub fn without(&self, removed: &[usize]) -> Result<Tournament> {
        let gone = VertexSet::from_members(self.n, removed.iter().copied())?;
        self.induced((0..self.n).filter(|v| !gone.contains(*v)))
    }

    pub fn special_vertices(&self) -> SpecialVertices {
        SpecialVertices {
            transmitter: (0..self.n).find(|&v| self.out_degree(v) == self.n - 1),
            receiver: (0..self.n).find(|&v| self.in_degree(v) == self.n - 1),
        }
    }

    /// Strong components via Tarjan's algorithm, then ordered by score.
    ///
    /// Panics if the condensation is not a total order, which cannot happen
    /// for a valid tournament.
    pub fn strong_decomposition(&self) -> StrongDecomposition {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut counter = 0;

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            let mut call = vec![(root, 0usize)];

            while let Some(&(v, mut next)) = call.last() {
                let mut child = None;
                while next < n {
                    let w = next;
                    next += 1;
                    if !self.beats(v, w) {
                        continue;
                    }
                    if index[w] == UNSEEN {
                        child = Some(w);
                        break;
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                }
                let top = call.len() - 1;
                call[top].1 = next;
                if let Some(w) = child {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }

        // Every vertex of a component beats all later components, so the
        // number of external out-arcs per vertex is the size of everything
        // after it.
        let later = |c: &Vec<usize>| {
            let k = c.len();
            let total: usize = c.iter().map(|&v| self.out_degree(v)).sum();
            (total - k * (k - 1) / 2) / k
        };
        comps.sort_by_key(|c| core::cmp::Reverse(later(c)));

        for (i, ci) in comps.iter().enumerate() {
            for cj in &comps[i + 1..] {
                for &u in ci {
                    for &v in cj {
                        assert!(
                            self.beats(u, v),
                            "condensation is not a total order: {v} -> {u}"
                        );
                    }
                }
            }
        }
        StrongDecomposition { components: comps }
    }

    /// Isomorphism test with the default order limit of 12.
    pub fn is_isomorphic(&self, other: &Tournament) -> Result<bool> {
        self.is_isomorphic_within(other, DEFAULT_ISO_LIMIT)
    }

    /// Permutation search pruned by score classes and arc consistency.
    pub fn is_isomorphic_within(&self, other: &Tournament, limit: usize) -> Result<bool> {
        let n = self.n.max(other.n);
        if n > limit {
            return Err(Error::SizeLimitExceeded { n, limit });
        }
        if self.n != other.n {
            return Ok(false);
        }
        let sa = self.scores();
        let sb = other.scores();
        let mut sorted_a = sa.clone();
        let mut sorted_b = sb.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return Ok(false);
        }

        // Most constrained vertices (smallest score class) first.
        let class_size = |s: usize| sa.iter().filter(|&&x| x == s).count();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (class_size(sa[v]), sa[v], v));

        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        Ok(self.extend_iso(other, &sa, &sb, &order, 0, &mut image, &mut used))
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &Tournament,
        sa: &[usize],
        sb: &[usize],
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..other.n {
            if used[w] || sb[w] != sa[v] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| self.beats(u, v) == other.beats(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if self.extend_iso(other, sa, sb, order, depth + 1, image, used) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
        false
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tournament(n = {})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                f.write_str(if self.beats(u, v) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
