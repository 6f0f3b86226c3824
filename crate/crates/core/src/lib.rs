//! Minimum equicuts of graphs, parity signed graphs, and the powers of
//! cycles.
//!
//! A parity labeling `f: V -> {1..n}` signs each edge `+1` when its
//! endpoint labels share a parity and `-1` otherwise. The least number of
//! negative edges over all labelings, the rna number `sigma^-(G)`, equals
//! the smallest cut `(X, X^c)` with `|X| = floor(n/2)`. This crate computes
//! it exactly by enumeration and by branch and bound, bounds it by local
//! search and edge-connectivity, and checks the closed-form values known for
//! cycles, complete graphs and the squares and cubes of cycles.

pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod parity;
pub mod random;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{
    circular_distance, make_circulant, make_complete, make_cycle, make_cycle_power, Graph,
    GraphFamily, GraphFamilySpec,
};
pub use parity::{
    equicut_size, is_balanced, is_parity_signed, negative_edge_count, parity_switch,
    signature_from_labeling, switch_vertices, Equicut, ParityLabeling, SignedGraph,
};
pub use solver::{
    edge_connectivity, rna_branch_and_bound, rna_exhaustive, rna_local_search, rna_lower_bound,
    solve, Method, SolveResult, SolverConfig,
};
