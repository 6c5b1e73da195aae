//! Linear forest partitions of k-degenerate graphs.
//!
//! [`solver::decompose`] splits the edges of a graph with maximum degree `Δ`
//! and degeneracy `k` into `ceil(Δ/2)` linear forests whenever `Δ >= 2k²-k`,
//! which is optimal. The remaining modules provide the building blocks, an
//! exact search for small graphs and an independent verifier.

pub mod error;
pub mod graph;
pub mod degeneracy;
mod flow;
pub mod sdr;
pub mod coloring;
pub mod solver;
pub mod verify;
pub mod oracle;
pub mod planarity;
pub mod io;
pub mod rng;
pub mod generate;
pub mod cli;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
pub use solver::{decompose, decompose_with, Decomposition, Mode, SolverOptions};
