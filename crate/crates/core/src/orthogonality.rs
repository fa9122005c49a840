//! Combinatorial orthogonality of (0,1) patterns and quadrangularity.
//!
//! Two 0/1 vectors are combinatorially orthogonal when their supports meet
//! in a number of positions other than exactly one. A tournament is
//! out-quadrangular when its adjacency rows are pairwise combinatorially
//! orthogonal, in-quadrangular when its columns are, and quadrangular when
//! both hold.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, blocks_for, Ones};
use crate::{Error, Result, Tournament, VertexSet};

/// A `rows x cols` 0/1 matrix, row-major, one bit per entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryPattern {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BinaryPattern {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = blocks_for(cols);
        BinaryPattern {
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut p = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    p.set(i, j, true);
                }
            }
        }
        p
    }

    /// Rows of booleans; every row must have the same length.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if let Some(r) = rows.iter().find(|r| r.as_ref().len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: r.as_ref().len(),
            });
        }
        Ok(Self::from_fn(rows.len(), cols, |i, j| rows[i].as_ref()[j]))
    }

    /// The adjacency matrix: entry `(i, j)` is 1 iff `i → j`.
    pub fn adjacency(t: &Tournament) -> Self {
        let n = t.n();
        let mut p = Self::zeros(n, n);
        for u in 0..n {
            p.row_mut(u).copy_from_slice(t.row(u));
        }
        p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        bits::test_bit(self.row(i), j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        if value {
            bits::set_bit(self.row_mut(i), j);
        } else {
            bits::clear_bit(self.row_mut(i), j);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn nnz(&self) -> usize {
        bits::popcount(&self.bits)
    }

    /// Interprets a square pattern as a tournament adjacency matrix.
    pub fn to_tournament(&self) -> Result<Tournament> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let rows: Vec<VertexSet> = (0..self.rows)
            .map(|i| VertexSet::from_members(self.cols, Ones::new(self.row(i))))
            .collect::<Result<_>>()?;
        Tournament::validate(self.rows, &rows)
    }
}

/// Pattern of a row-major real matrix: 1 exactly where the entry is nonzero.
///
/// The comparison is exact; callers round beforehand if they need a
/// tolerance.
pub fn pattern_of(rows: usize, cols: usize, entries: &[f64]) -> Result<BinaryPattern> {
    if entries.len() != rows * cols {
        return Err(Error::DimensionMismatch {
            expected: rows * cols,
            found: entries.len(),
        });
    }
    Ok(BinaryPattern::from_fn(rows, cols, |i, j| {
        entries[i * cols + j] != 0.0
    }))
}

/// Row-orthogonality verdict with the lexicographically smallest failing
/// row pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowOrthogonality {
    pub verdict: bool,
    pub witness: Option<(usize, usize)>,
}

pub fn comb_row_orthogonal(p: &BinaryPattern) -> RowOrthogonality {
    for x in 0..p.rows {
        for y in x + 1..p.rows {
            if bits::and_count(p.row(x), p.row(y)) == 1 {
                return RowOrthogonality {
                    verdict: false,
                    witness: Some((x, y)),
                };
            }
        }
    }
    RowOrthogonality {
        verdict: true,
        witness: None,
    }
}

/// Both the pattern and its transpose are combinatorially row-orthogonal.
pub fn comb_orthogonal(p: &BinaryPattern) -> Result<bool> {
    if !p.is_square() {
        return Err(Error::NotSquare {
            rows: p.rows,
            cols: p.cols,
        });
    }
    Ok(comb_row_orthogonal(p).verdict && comb_row_orthogonal(&p.transpose()).verdict)
}

/// Nonzero count against the `4n - 4` bound for fully indecomposable
/// orthogonal matrices. Informational: indecomposability is not checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NnzReport {
    pub nnz: usize,
    pub bound_4n_minus_4: usize,
    pub meets: bool,
}

pub fn nnz_report(p: &BinaryPattern) -> Result<NnzReport> {
    if !p.is_square() {
        return Err(Error::NotSquare {
            rows: p.rows,
            cols: p.cols,
        });
    }
    if p.rows < 2 {
        return Err(Error::TooSmall(p.rows));
    }
    let nnz = p.nnz();
    let bound = 4 * p.rows - 4;
    Ok(NnzReport {
        nnz,
        bound_4n_minus_4: bound,
        meets: nnz >= bound,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Out,
    In,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Out => "out",
            Side::In => "in",
        }
    }
}

/// A pair whose out- (or in-) neighbourhoods meet in exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub u: usize,
    pub v: usize,
    pub common: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadReport {
    pub verdict: bool,
    pub side: Side,
    pub witness: Option<Witness>,
}

/// Out- and in-side reports together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadPair {
    pub out: QuadReport,
    pub inn: QuadReport,
}

impl QuadPair {
    pub fn verdict(&self) -> bool {
        self.out.verdict && self.inn.verdict
    }
}

/// Scans pairs `u < v` of `rows` in lexicographic order for a unit overlap.
fn scan_rows(n: usize, words: usize, rows: &[u64], side: Side) -> QuadReport {
    let row = |u: usize| &rows[u * words..(u + 1) * words];
    for u in 0..n {
        for v in u + 1..n {
            if bits::and_count(row(u), row(v)) == 1 {
                let common = row(u).iter().zip(row(v)).map(|(a, b)| a & b).collect();
                return QuadReport {
                    verdict: false,
                    side,
                    witness: Some(Witness {
                        u,
                        v,
                        common: VertexSet::from_blocks(n, common),
                    }),
                };
            }
        }
    }
    QuadReport {
        verdict: true,
        side,
        witness: None,
    }
}

fn in_rows(t: &Tournament) -> Vec<u64> {
    let (n, words) = (t.n(), t.words());
    let mut rows = vec![0u64; n * words];
    for u in 0..n {
        for v in Ones::new(t.row(u)) {
            bits::set_bit(&mut rows[v * words..(v + 1) * words], u);
        }
    }
    rows
}

/// One side of the quadrangularity test, by bit-row intersections.
pub fn quadrangularity(t: &Tournament, side: Side) -> QuadReport {
    let (n, words) = (t.n(), t.words());
    match side {
        Side::Out => {
            let rows: Vec<u64> = (0..n).flat_map(|u| t.row(u).iter().copied()).collect();
            scan_rows(n, words, &rows, Side::Out)
        }
        Side::In => scan_rows(n, words, &in_rows(t), Side::In),
    }
}

pub fn quadrangularity_both(t: &Tournament) -> QuadPair {
    QuadPair {
        out: quadrangularity(t, Side::Out),
        inn: quadrangularity(t, Side::In),
    }
}

pub fn is_out_quadrangular(t: &Tournament) -> bool {
    quadrangularity(t, Side::Out).verdict
}

pub fn is_in_quadrangular(t: &Tournament) -> bool {
    quadrangularity(t, Side::In).verdict
}

pub fn is_quadrangular(t: &Tournament) -> bool {
    is_out_quadrangular(t) && is_in_quadrangular(t)
}

/// `|O[u] ∪ O[v]| != n - 1` for every pair, with `O[x] = O(x) ∪ {x}`.
///
/// Equivalent to in-quadrangularity, but computed from out-rows only.
pub fn closed_union_in_quad(t: &Tournament) -> bool {
    let n = t.n();
    let closed: Vec<VertexSet> = (0..n)
        .map(|u| {
            let mut s = t.out_set(u);
            s.insert(u);
            s
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if closed[u].union(&closed[v]).len() == n - 1 {
                return false;
            }
        }
    }
    true
}
