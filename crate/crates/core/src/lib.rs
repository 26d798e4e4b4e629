//! Exact analysis of balance constants of finite posets.
//!
//! * [`poset`] and [`constructions`]: posets from covers, permutations,
//!   diagrams and classical lattices.
//! * [`extensions`]: linear extension counts, pair matrices, `δ(P)`.
//! * [`structure`]: twin / almost-twin pairs, automorphisms and the other
//!   certificates that force balanced pairs.
//! * [`tableaux`]: Young diagrams, hook lengths, SYT counts.
//! * [`search`]: exhaustive enumeration of small posets up to isomorphism.
//! * [`figures`] and [`repro`]: published examples with their expected
//!   values, checked end to end.

pub mod constructions;
pub mod error;
pub mod extensions;
pub mod figures;
pub mod par;
pub mod poset;
pub mod ratio;
pub mod repro;
pub mod search;
pub mod structure;
pub mod tableaux;

pub use error::{Error, Result};
pub use extensions::{
    balance_constant, count_extensions, enumerate_extensions, is_alpha_balanced, pair_matrix,
    prob_before, BalanceReport, ExtensionStats,
};
pub use par::Exec;
pub use poset::{DownSet, Permutation, Poset, PosetJson};
pub use ratio::ExactRatio;
pub use tableaux::{Cell, Shape};
