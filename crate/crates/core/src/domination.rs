//! Dominating sets, domination number and the two pair graphs built from
//! tournament neighbourhoods.

use alloc::vec::Vec;

use crate::bits::{self, block_mask};
use crate::{Error, Result, Tournament};

/// Largest order accepted by [`domination_number`].
pub const MAX_GAMMA_N: usize = 24;

/// Undirected graph on `0..n`; edges are `(x, y)` with `x < y`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        let e = (x.min(y), x.max(y));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if !self.has_edge(x, y) {
                    edges.push((x, y));
                }
            }
        }
        SimpleGraph { n: self.n, edges }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationInfo {
    pub gamma: usize,
    /// Lexicographically smallest minimum dominating set.
    pub min_set: Vec<usize>,
    /// Every dominant pair, i.e. the edges of the domination graph.
    pub pairs: Vec<(usize, usize)>,
}

/// Closed out-neighbourhood rows `O[u] = O(u) ∪ {u}`, flattened.
fn closed_rows(t: &Tournament) -> Vec<u64> {
    let words = t.words();
    let mut rows = Vec::with_capacity(t.n() * words);
    for u in 0..t.n() {
        let start = rows.len();
        rows.extend_from_slice(t.row(u));
        bits::set_bit(&mut rows[start..], u);
    }
    rows
}

struct Cover {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Cover {
    fn new(t: &Tournament) -> Self {
        Cover {
            n: t.n(),
            words: t.words(),
            rows: closed_rows(t),
        }
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    fn covers(&self, set: &[usize]) -> bool {
        (0..self.words).all(|b| {
            let acc = set.iter().fold(0u64, |acc, &u| acc | self.row(u)[b]);
            acc == block_mask(self.n, b)
        })
    }
}

/// `S ∪ ⋃ O(s)` is the whole vertex set.
pub fn dominates(t: &Tournament, set: &[usize]) -> Result<bool> {
    if let Some(&v) = set.iter().find(|&&v| v >= t.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: t.n() });
    }
    Ok(Cover::new(t).covers(set))
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic
/// order; `false` once exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact `γ(T)` by iterative deepening over subset size.
pub fn domination_number(t: &Tournament) -> Result<DominationInfo> {
    let n = t.n();
    if n > MAX_GAMMA_N {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: MAX_GAMMA_N,
        });
    }
    let cover = Cover::new(t);
    let mut found = None;
    'size: for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if cover.covers(&idx) {
                found = Some(idx);
                break 'size;
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    let min_set = found.expect("the whole vertex set dominates");
    Ok(DominationInfo {
        gamma: min_set.len(),
        min_set,
        pairs: domination_graph(t).edges,
    })
}

/// `true` iff no dominating set of size at most `k` exists, `k ∈ {1, 2, 3}`.
pub fn gamma_exceeds(t: &Tournament, k: usize) -> Result<bool> {
    if !(1..=3).contains(&k) {
        return Err(Error::UnsupportedK(k));
    }
    let n = t.n();
    // Any superset of a dominating set dominates, so with n <= k the whole
    // vertex set is a witness.
    if n <= k {
        return Ok(false);
    }
    let c = Cover::new(t);
    if (0..n).any(|u| c.covers(&[u])) {
        return Ok(false);
    }
    if k >= 2 && (0..n).any(|u| (u + 1..n).any(|v| c.covers(&[u, v]))) {
        return Ok(false);
    }
    if k >= 3
        && (0..n).any(|u| {
            (u + 1..n).any(|v| (v + 1..n).any(|w| c.covers(&[u, v, w])))
        })
    {
        return Ok(false);
    }
    Ok(true)
}

/// Edge `{x, y}` iff every other vertex is beaten by `x` or `y`.
///
/// On two vertices the single pair is an edge vacuously.
pub fn domination_graph(t: &Tournament) -> SimpleGraph {
    let c = Cover::new(t);
    let n = t.n();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if c.covers(&[x, y]) {
                edges.push((x, y));
            }
        }
    }
    SimpleGraph { n, edges }
}

/// Edge `{x, y}` iff `O(x) ∩ O(y) ≠ ∅`.
pub fn competition_graph(t: &Tournament) -> SimpleGraph {
    let n = t.n();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if bits::and_count(t.row(x), t.row(y)) > 0 {
                edges.push((x, y));
            }
        }
    }
    SimpleGraph { n, edges }
}
