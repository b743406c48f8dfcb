//! Exact distinguishing number and distinguishing index of small graphs.
//!
//! The crate computes `D(G)` and `D'(G)` with verified witnesses, applies the
//! local operations (vertex and edge deletion, `⊙`, vertex and edge
//! contraction), rebuilds the labelings used in the known bounds for those
//! operations, and audits the bounds exhaustively over small connected graphs.

pub mod audit;
pub mod automorphism;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod solver;

pub use automorphism::{automorphisms, AutomorphismGroup, Permutation};
pub use error::{Error, Result};
pub use graph::{parse_graph6, to_graph6, Edge, Graph, OpKind, Site};
pub use solver::{distinguishing_index, distinguishing_number, EdgeLabeling, Mode, SolverConfig, VertexLabeling};
