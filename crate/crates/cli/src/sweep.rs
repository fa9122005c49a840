//! Parallel sweeps whose merged output does not depend on worker count.
//!
//! Work is cut into fixed index ranges; rayon processes them in any order
//! and `collect` puts the per-chunk results back in range order before they
//! are folded.

use quadtour_core::generators::{
    all_tournaments, augment, quadratic_residue, random_tournament, rotational, tournament_count,
    u_n,
};
use quadtour_core::symbol_search::{
    check_search_order, family_symbol, search_range, symbol_count, symbol_criterion,
    symbol_from_choice,
};
use std::ops::Range;
use quadtour_core::theorems::{verify_rotational_dichotomy, Check};
use quadtour_core::{Seed, Symbol, Tournament};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};

const CHUNK: u64 = 4096;

/// Runs `f` on a pool of `threads` workers; `None` or 0 means rayon's
/// default.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn chunks(total: u64) -> Vec<Range<u64>> {
    (0..total.div_ceil(CHUNK))
        .map(|i| i * CHUNK..((i + 1) * CHUNK).min(total))
        .collect()
}

/// All hits in choice-index order.
pub fn search_all(n: usize) -> CliResult<Vec<Symbol>> {
    let total = symbol_count(n)?;
    let parts: Vec<Vec<Symbol>> = chunks(total)
        .into_par_iter()
        .map(|r| search_range(n, r))
        .collect::<Result<_, _>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// First hit in choice-index order and the number of symbols examined up
/// to and including it. Scans one batch of chunks at a time.
pub fn search_first(n: usize) -> CliResult<(Option<Symbol>, u64)> {
    let total = symbol_count(n)?;
    check_search_order(n, usize::MAX)?;
    let all = chunks(total);
    let batch = rayon::current_num_threads().max(1);
    for group in all.chunks(batch) {
        let found: Vec<Option<(u64, Symbol)>> = group
            .par_iter()
            .map(|r| first_in_range(n, r.clone()))
            .collect::<Result<_, _>>()?;
        if let Some((c, hit)) = found.into_iter().flatten().next() {
            return Ok((Some(hit), c + 1));
        }
    }
    Ok((None, total))
}

fn first_in_range(n: usize, r: Range<u64>) -> quadtour_core::Result<Option<(u64, Symbol)>> {
    for c in r {
        let sym = symbol_from_choice(n, c)?;
        if symbol_criterion(&sym)?.verdict {
            return Ok(Some((c, sym)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub id: &'static str,
    pub applicable: u64,
    pub passed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: &'static str,
    pub instance: String,
    pub matrix: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub instances: u64,
    pub checks: Vec<CheckTally>,
    pub first_failure: Option<Failure>,
    pub verdict: bool,
}

const DICHOTOMY: &str = "rotational-dichotomy";

struct Tally {
    instances: u64,
    counts: Vec<(u64, u64)>,
    // earliest failing instance, by position in the corpus
    failure: Option<(&'static str, String, Tournament)>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            instances: 0,
            counts: vec![(0, 0); Check::ALL.len() + 1],
            failure: None,
        }
    }

    fn record(&mut self, slot: usize, id: &'static str, ok: bool, name: &dyn Fn() -> String, t: &Tournament) {
        self.counts[slot].0 += 1;
        if ok {
            self.counts[slot].1 += 1;
        } else if self.failure.is_none() {
            self.failure = Some((id, name(), t.clone()));
        }
    }

    fn run(&mut self, name: &dyn Fn() -> String, t: &Tournament, sym: Option<&Symbol>) {
        self.instances += 1;
        for (slot, c) in Check::ALL.iter().enumerate() {
            if let Some(ok) = c.run(t) {
                self.record(slot, c.id(), ok, name, t);
            }
        }
        if let Some(s) = sym {
            let ok = verify_rotational_dichotomy(t, s) == Ok(true);
            self.record(Check::ALL.len(), DICHOTOMY, ok, name, t);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            a.0 += b.0;
            a.1 += b.1;
        }
        if self.failure.is_none() {
            self.failure = other.failure;
        }
        self
    }

    fn summary(self) -> VerifySummary {
        let ids = Check::ALL.iter().map(|c| c.id()).chain([DICHOTOMY]);
        let checks = ids
            .zip(self.counts)
            .map(|(id, (applicable, passed))| CheckTally { id, applicable, passed })
            .collect();
        let first_failure = self.failure.map(|(check, instance, t)| Failure {
            check,
            instance,
            matrix: crate::matrix::render(&t),
        });
        VerifySummary {
            instances: self.instances,
            verdict: first_failure.is_none(),
            checks,
            first_failure,
        }
    }
}

/// Largest `n` for the exhaustive suite.
pub const MAX_EXHAUSTIVE_N: usize = quadtour_core::generators::MAX_EXHAUSTIVE_N;

/// Every labeled tournament on `1..=n_max` vertices.
pub fn verify_exhaustive(n_max: usize) -> CliResult<VerifySummary> {
    if n_max > MAX_EXHAUSTIVE_N {
        return Err(quadtour_core::Error::SizeLimitExceeded {
            n: n_max,
            limit: MAX_EXHAUSTIVE_N,
        }
        .into());
    }
    let mut total = Tally::new();
    for n in 1..=n_max {
        let count = tournament_count(n)?;
        let parts: Vec<Tally> = chunks(count)
            .into_par_iter()
            .map(|r| {
                let mut tally = Tally::new();
                for (i, t) in all_tournaments(n).expect("n checked").range(r).indexed() {
                    tally.run(&|| format!("n={n} index={i}"), &t, None);
                }
                tally
            })
            .collect();
        total = parts.into_iter().fold(total, Tally::merge);
    }
    Ok(total.summary())
}

/// Named instances: quadratic-residue, `U_n`, family and augmented
/// tournaments.
pub fn named_corpus() -> Vec<(String, Tournament, Option<Symbol>)> {
    let mut out = Vec::new();
    for p in [3, 7, 11, 19] {
        let sym = quadtour_core::generators::quadratic_residue_symbol(p).expect("prime 3 mod 4");
        out.push((format!("qr{p}"), quadratic_residue(p).expect("prime"), Some(sym)));
    }
    for n in [3, 5, 7, 9, 11] {
        let sym = Symbol::new(n, 1..=(n - 1) / 2).expect("valid");
        out.push((format!("u{n}"), u_n(n).expect("odd"), Some(sym)));
    }
    for n in [11, 15, 19] {
        let sym = family_symbol(n).expect("family order");
        out.push((format!("family{n}"), rotational(&sym), Some(sym)));
    }
    let bases = [
        ("qr7", quadratic_residue(7).expect("prime")),
        ("u5", u_n(5).expect("odd")),
        ("family11", rotational(&family_symbol(11).expect("family order"))),
    ];
    for (name, b) in bases {
        for (tag, tx, rx) in [("tr", true, true), ("t", true, false), ("r", false, true)] {
            out.push((format!("augment({name},{tag})"), augment(&b, tx, rx), None));
        }
    }
    out
}

/// Named corpus plus `random_count` seeded tournaments with
/// `n ∈ 3..=n_max`.
pub fn theorem_corpus(n_max: usize, random_count: u64) -> Vec<(String, Tournament, Option<Symbol>)> {
    let mut out = named_corpus();
    let span = n_max.max(3) - 2;
    for s in 0..random_count {
        let n = 3 + (s % span as u64) as usize;
        out.push((format!("random(n={n},seed={s})"), random_tournament(n, Seed(s)), None));
    }
    out
}

pub fn verify_corpus(corpus: &[(String, Tournament, Option<Symbol>)]) -> VerifySummary {
    let parts: Vec<Tally> = corpus
        .par_chunks(64)
        .map(|chunk| {
            let mut tally = Tally::new();
            for (name, t, sym) in chunk {
                tally.run(&|| name.clone(), t, sym.as_ref());
            }
            tally
        })
        .collect();
    parts.into_iter().fold(Tally::new(), Tally::merge).summary()
}
