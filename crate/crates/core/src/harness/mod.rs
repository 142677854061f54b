//! Test-instance generation and small-scale oracles.

pub mod brute;
pub mod generators;
pub mod graph;
pub mod reductions;
pub mod rng;
