//! Tournaments, combinatorial orthogonality and quadrangularity.
//!
//! A tournament is stored as `n` out-neighbourhood bit-rows. On top of that
//! representation this crate provides:
//!
//! * [`tournament`]: validation, neighbourhoods, dual, induced sub-tournaments,
//!   strong decomposition and small-order isomorphism;
//! * [`generators`]: rotational, `U_n`, quadratic residue, seeded random and
//!   augmented tournaments, plus exhaustive labeled enumeration;
//! * [`orthogonality`]: (0,1) patterns, combinatorial orthogonality and the
//!   out-/in-quadrangularity predicates with minimal witnesses;
//! * [`domination`]: dominating sets, domination number, domination and
//!   competition graphs;
//! * [`theorems`]: a rule-based quadrangularity classifier and verifiers that
//!   check each characterization against the direct definition;
//! * [`symbol_search`]: the difference-pair criterion for rotational symbols,
//!   symbol enumeration and the `n ≡ 3 (mod 4)` family.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod domination;
mod error;
pub mod generators;
pub mod orthogonality;
pub mod symbol_search;
pub mod theorems;
pub mod tournament;

pub use bits::VertexSet;
pub use error::{Error, Result, SymbolDefect};
pub use generators::{Seed, Symbol};
pub use orthogonality::{BinaryPattern, QuadReport, Side};
pub use tournament::{StrongDecomposition, Tournament};
