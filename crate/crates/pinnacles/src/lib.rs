//! Permutations with a prescribed pinnacle set.
//!
//! Throughout, a permutation of `{1, .., n}` is written in one-line notation
//! and the cells just outside the word count as +infinity. A value is a
//! *pinnacle* if both neighbours are smaller and a *vale* if both are
//! larger; the positions carrying them are *peaks* and *valleys*.
//!
//! The crate provides:
//!
//! - the basic statistics and the `x`-factorization ([`perm`]);
//! - the classical and dual Foata-Strehl involutions, the commuting family
//!   they generate, and orbit enumeration ([`action`]);
//! - FS-minimal permutations, the canonical representative of each orbit of
//!   the dual action ([`minimal`]);
//! - admissibility of pinnacle/vale pairs and enumeration of all vale sets
//!   compatible with a pinnacle set ([`admissible`]);
//! - canonical arrangements, the closed counting formula, sharp bounds, and
//!   the naive and constructive generation algorithms ([`counting`]).

pub mod action;
pub mod admissible;
pub mod counting;
pub mod error;
pub mod minimal;
pub mod perm;
mod word;

pub use error::{Error, Result};
pub use perm::{for_each_permutation, Permutation, XFactorization};

/// Default cap on `n` for operations that walk all of `S_n`.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 10;
