//! Bounds, constructions and exact search for `n(k, d)`, the largest size of
//! a `k`-neighborly family of `d`-dimensional boxes.
//!
//! The crate works entirely in the joker-vector model: `n(k, d)` is the
//! largest set of words over `{0, 1, *}` of length `d` whose pairwise
//! distances (counting only positions where neither word has a `*`) all
//! lie in `1..=k`.
//!
//! * [`vector`] and [`family`]: words, distances, the cover relation.
//! * [`bounds`]: every bound formula, evaluated exactly.
//! * [`constructions`]: extremal families and binary codes.
//! * [`analysis`]: cover profiles, weights and an auditor for the weighted
//!   counting argument.
//! * [`search`]: branch-and-bound maximum family search and certification.
//! * [`cli`]: family files, reports and the bound table.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod analysis;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod dyadic;
pub mod error;
pub mod family;
pub mod reference;
pub mod search;
pub mod vector;

pub use bounds::{report, BoundName, BoundReport, BoundValue};
pub use dyadic::DyadicSum;
pub use error::{Error, Result};
pub use family::{is_k_neighborly, Family, Violation};
pub use vector::{complement, covers, hamming_distance, join, BinaryVector, JokerVector, Symbol};
