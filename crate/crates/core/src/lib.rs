//! Diagonal distance of graphs.
//!
//! `f(G)` is the minimum of `|A| + |B(A)|` over nonempty vertex subsets `A`,
//! where `B(A)` collects the vertices outside `A` with an odd number of
//! neighbors inside; equivalently, the fewest sign-flip operations that
//! return an all-+1 board to all +1. This crate computes `f(G)` exactly by
//! bit-level enumeration, verifies witnesses by simulating the flip game,
//! searches for witnesses heuristically at larger sizes, and evaluates the
//! analytic constants, bounds, and random-graph predictions around the
//! parameter.

pub mod analytic;
pub mod combin;
pub mod error;
pub mod exact;
pub mod experiment;
pub mod flip;
pub mod format;
pub mod graph;
pub mod heuristic;
mod pool;
pub mod rng;

pub use error::{Error, Result};
pub use exact::{
    diagonal_distance, diagonal_distance_with, naive_diagonal_distance, BoundSource, SolveOptions,
    SolveResult,
};
pub use flip::{apply_plan, compile_witness, verify_witness, OperationPlan, VertexOp, Witness};
pub use graph::{Graph, VertexSet};
