//! Combinatorics of symbols and explicit generalized Springer
//! correspondences for classical groups.
//!
//! - [`gf2`]: F2 spaces presented by identify/kill relations.
//! - [`partitions`]: partitions, bipartitions and their counts.
//! - [`symbols`]: symbols, shift equivalence, staircase bijection, similarity classes.
//! - [`unipotent`]: marked partitions, `c`-sequences, A-spaces.
//! - [`springer`]: the four correspondences in characteristic 2.
//! - [`spin`]: the closed formula for spin groups.
//! - [`counting`]: class counts and cuspidal criteria.
//! - [`selftest`]: runtime invariant checks used by `springer selftest`.

pub mod cli;
pub mod counting;
pub mod gf2;
pub mod partitions;
pub mod selftest;
pub mod spin;
pub mod springer;
pub mod symbols;
pub mod unipotent;
