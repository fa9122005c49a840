//! Rotational symbols whose tournaments are quadrangular.
//!
//! For `n > 3` a rotational tournament with symbol `S` is quadrangular iff
//! every `m` in `1..=(n-1)/2` is realised as `i - j (mod n)` by at least two
//! distinct 2-subsets `{i, j}` of `S`. This turns the search into pure
//! arithmetic over the `2^((n-1)/2)` symbols of order `n`.

use alloc::vec::Vec;
use core::ops::Range;

use crate::{Error, Result, Symbol};

/// Default upper bound on `n` for [`search`] (`2^15` symbols).
pub const DEFAULT_MAX_SEARCH_N: usize = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionReport {
    pub verdict: bool,
    /// Smallest `m` realised by fewer than two distinct 2-subsets.
    pub failing_m: Option<usize>,
}

/// Number of distinct 2-subsets `{i, j}` of the symbol with
/// `i - j ≡ m (mod n)` for some ordering of the pair.
pub fn subset_representations(sym: &Symbol, m: usize) -> usize {
    let n = sym.n();
    let s = sym.members();
    let mut count = 0;
    for (a, &i) in s.iter().enumerate() {
        for &j in &s[a + 1..] {
            if (i + n - j) % n == m || (j + n - i) % n == m {
                count += 1;
            }
        }
    }
    count
}

pub fn symbol_criterion(sym: &Symbol) -> Result<CriterionReport> {
    let n = sym.n();
    if n <= 3 {
        return Err(Error::TooSmall(n));
    }
    let failing_m = (1..=(n - 1) / 2).find(|&m| subset_representations(sym, m) < 2);
    Ok(CriterionReport {
        verdict: failing_m.is_none(),
        failing_m,
    })
}

fn check_order(n: usize) -> Result<usize> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::EvenOrTooSmall(n));
    }
    Ok((n - 1) / 2)
}

/// The symbol at position `choice` of the enumeration order.
///
/// Bit `k - i` of `choice` (`k = (n-1)/2`) picks between `i` (0) and
/// `n - i` (1), so `c_1` is the most significant bit of the choice vector.
pub fn symbol_from_choice(n: usize, choice: u64) -> Result<Symbol> {
    let k = check_order(n)?;
    if k < 64 && choice >> k != 0 {
        return Err(Error::SizeLimitExceeded {
            n: choice as usize,
            limit: (1usize << k) - 1,
        });
    }
    let mut members: Vec<usize> = (1..=k)
        .map(|i| if choice >> (k - i) & 1 == 1 { n - i } else { i })
        .collect();
    members.sort_unstable();
    Ok(Symbol::from_sorted_unchecked(n, members))
}

/// `2^((n-1)/2)`; errors when it does not fit the index type.
pub fn symbol_count(n: usize) -> Result<u64> {
    let k = check_order(n)?;
    if k >= 64 {
        return Err(Error::SizeLimitExceeded { n, limit: 127 });
    }
    Ok(1u64 << k)
}

/// Every symbol of order `n`, in lexicographic order of the choice vector.
pub fn enumerate_symbols(n: usize) -> Result<impl Iterator<Item = Symbol>> {
    let count = symbol_count(n)?;
    Ok((0..count).map(move |c| symbol_from_choice(n, c).expect("in range")))
}

/// Hits among choice indices `range`, in index order.
pub fn search_range(n: usize, range: Range<u64>) -> Result<Vec<Symbol>> {
    let count = symbol_count(n)?;
    if n <= 3 {
        return Err(Error::EvenOrTooSmall(n));
    }
    let end = range.end.min(count);
    let mut hits = Vec::new();
    for c in range.start.min(end)..end {
        let sym = symbol_from_choice(n, c)?;
        if symbol_criterion(&sym)?.verdict {
            hits.push(sym);
        }
    }
    Ok(hits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub n: usize,
    pub hits: Vec<Symbol>,
    pub examined: u64,
}

pub fn search(n: usize) -> Result<SearchOutcome> {
    search_within(n, DEFAULT_MAX_SEARCH_N)
}

/// Exhaustive search with an explicit bound on `n`.
pub fn search_within(n: usize, max_n: usize) -> Result<SearchOutcome> {
    check_search_order(n, max_n)?;
    let examined = symbol_count(n)?;
    Ok(SearchOutcome {
        n,
        hits: search_range(n, 0..examined)?,
        examined,
    })
}

/// Validates `n` for a symbol search: odd, greater than 3, at most `max_n`.
pub fn check_search_order(n: usize, max_n: usize) -> Result<()> {
    if n <= 3 || n.is_multiple_of(2) {
        return Err(Error::EvenOrTooSmall(n));
    }
    if n > max_n {
        return Err(Error::SizeLimitExceeded { n, limit: max_n });
    }
    Ok(())
}

/// Odd `i <= n - 2` except `(n+3)/2`, together with `(n-3)/2`, for
/// `n ≡ 3 (mod 4)`, `n >= 11`.
pub fn family_symbol(n: usize) -> Result<Symbol> {
    if n % 4 != 3 {
        return Err(Error::WrongResidueClass(n));
    }
    if n < 11 {
        return Err(Error::TooSmall(n));
    }
    let skip = (n + 3) / 2;
    let members = (1..=n - 2)
        .filter(|&i| i % 2 == 1 && i != skip)
        .chain([(n - 3) / 2]);
    Symbol::new(n, members)
}
