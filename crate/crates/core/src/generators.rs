//! Named and random tournaments.

use alloc::vec::Vec;
use core::ops::Range;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::{Error, Result, SymbolDefect, Tournament};

/// Largest order accepted by [`all_tournaments`] (`2^21` labeled tournaments).
pub const MAX_EXHAUSTIVE_N: usize = 7;

/// Difference set of a rotational tournament on `Z_n`.
///
/// Holds exactly one of `i`, `n - i` for every `1 <= i <= (n-1)/2`.
/// Members are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    n: usize,
    members: Vec<usize>,
}

impl Symbol {
    pub fn new<I>(n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let bad = |d| Err(Error::InvalidSymbol(d));
        if n < 3 || n.is_multiple_of(2) {
            return bad(SymbolDefect::BadOrder(n));
        }
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return bad(SymbolDefect::Duplicate(w[0]));
            }
        }
        if let Some(&i) = members.iter().find(|&&i| i == 0 || i >= n) {
            return bad(SymbolDefect::OutOfRange(i));
        }
        for &i in &members {
            if i < n - i && members.binary_search(&(n - i)).is_ok() {
                return bad(SymbolDefect::ComplementPair(i, n - i));
            }
        }
        let k = (n - 1) / 2;
        if members.len() != k {
            return bad(SymbolDefect::WrongSize {
                expected: k,
                found: members.len(),
            });
        }
        Ok(Symbol { n, members })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<usize>) -> Self {
        debug_assert!(Symbol::new(n, members.iter().copied()).is_ok());
        Symbol { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// `{n - i : i in S}`, the symbol of the dual.
    pub fn negated(&self) -> Symbol {
        let mut m: Vec<usize> = self.members.iter().map(|&i| self.n - i).collect();
        m.sort_unstable();
        Symbol::from_sorted_unchecked(self.n, m)
    }
}

/// Seed for [`random_tournament`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

/// `i → j` iff `(j - i) mod n` is in the symbol.
pub fn rotational(sym: &Symbol) -> Tournament {
    let n = sym.n();
    Tournament::from_fn(n, |i, j| sym.contains(j - i))
}

/// `U_n`, the rotational tournament with symbol `{1, .., (n-1)/2}`.
pub fn u_n(n: usize) -> Result<Tournament> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::EvenOrTooSmall(n));
    }
    Ok(rotational(&Symbol::from_sorted_unchecked(
        n,
        (1..=(n - 1) / 2).collect(),
    )))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Nonzero quadratic residues modulo a prime `p ≡ 3 (mod 4)`.
pub fn quadratic_residue_symbol(p: usize) -> Result<Symbol> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(Error::WrongResidueClass(p));
    }
    let mut squares: Vec<usize> = (1..p).map(|x| x * x % p).collect();
    squares.sort_unstable();
    squares.dedup();
    Symbol::new(p, squares)
}

/// `QR_p`.
pub fn quadratic_residue(p: usize) -> Result<Tournament> {
    quadratic_residue_symbol(p).map(|s| rotational(&s))
}

/// Uniform random labeled tournament.
///
/// The generator is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`.
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and each one
/// consumes a single `next_u32()`; its lowest bit set means `u → v`. The
/// stream is value-stable across platforms, so `(n, seed)` pins the output.
///
/// Panics if `n == 0`.
pub fn random_tournament(n: usize, seed: Seed) -> Tournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    Tournament::from_fn(n, |_, _| rng.next_u32() & 1 == 1)
}

/// Appends a transmitter (label `n`) and/or a receiver (the last label).
/// The transmitter beats the receiver when both are added.
pub fn augment(t: &Tournament, add_transmitter: bool, add_receiver: bool) -> Tournament {
    let n = t.n();
    let tx = add_transmitter.then_some(n);
    let rx = add_receiver.then_some(n + usize::from(add_transmitter));
    let total = n + usize::from(add_transmitter) + usize::from(add_receiver);
    Tournament::from_fn(total, |u, v| {
        if Some(u) == tx || Some(v) == rx {
            true
        } else if Some(v) == tx || Some(u) == rx {
            false
        } else {
            t.beats(u, v)
        }
    })
}

/// Number of labeled tournaments on `n` vertices, `2^(n(n-1)/2)`.
pub fn tournament_count(n: usize) -> Result<u64> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: MAX_EXHAUSTIVE_N,
        });
    }
    Ok(1u64 << (n * n.saturating_sub(1) / 2))
}

/// The tournament with orientation bit-string `index`.
///
/// Pairs `(u, v)`, `u < v`, are read in lexicographic order; the first pair
/// is the most significant bit and a 1 bit means `u → v`.
pub fn tournament_at(n: usize, index: u64) -> Tournament {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut p = 0;
    Tournament::from_fn(n, |_, _| {
        p += 1;
        index >> (pairs - p) & 1 == 1
    })
}

/// Every labeled tournament on `n` vertices, once, in bit-string order.
pub fn all_tournaments(n: usize) -> Result<AllTournaments> {
    let count = tournament_count(n)?;
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    Ok(AllTournaments { n, next: 0..count })
}

/// Iterator returned by [`all_tournaments`]; [`AllTournaments::range`]
/// restricts it to a sub-range for partitioned consumption.
#[derive(Debug, Clone)]
pub struct AllTournaments {
    n: usize,
    next: Range<u64>,
}

impl AllTournaments {
    /// Indices `range` only; clamped to the full index space.
    pub fn range(mut self, range: Range<u64>) -> Self {
        let end = range.end.min(self.next.end);
        self.next = range.start.min(end)..end;
        self
    }

    /// Yields `(index, tournament)` pairs instead.
    pub fn indexed(self) -> impl Iterator<Item = (u64, Tournament)> {
        let n = self.n;
        self.next.map(move |i| (i, tournament_at(n, i)))
    }
}

impl Iterator for AllTournaments {
    type Item = Tournament;

    fn next(&mut self) -> Option<Tournament> {
        self.next.next().map(|i| tournament_at(self.n, i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.next.size_hint()
    }
}
