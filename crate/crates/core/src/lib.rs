//! Random generation of symmetric groups: permutation and group machinery,
//! exact character theory of `S_n`, the counting lemmas behind the
//! second-moment argument, and seeded experiments tying them together.
//!
//! Permutations act on `0..n` and compose right to left:
//! `(p * q)(i) = p(q(i))`. Text formats (cycle notation, one-line notation,
//! CSV labels) are 1-based.

pub mod chars;
pub mod cli;
pub mod counting;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod group;
pub mod partition;
pub mod perm;

pub use error::{Error, Result};
