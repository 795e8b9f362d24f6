//! Regular F-free graph constructions for bipartite F, with the machinery to
//! equalize degrees across disjoint unions and brute-force oracles that
//! re-check every structural claim.

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod numtheory;
pub mod regularize;
pub mod verify;

pub use error::{Error, Result};
