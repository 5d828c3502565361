//! Exact tools for the upper dominating set problem.
//!
//! * [`graph`], [`set`], [`induced`], [`formats`]: simple graphs, vertex
//!   sets, induced containment, graph6 and edge-list I/O.
//! * [`domination`]: predicates, private-neighbour normalization and
//!   exhaustive α/γ/Γ oracles.
//! * [`two_k2`]: the triangle-based polynomial algorithm for 2K2-free graphs.
//! * [`constructions`]: the edge gadget, subdivision and Q-graph reductions
//!   with solution lifting in both directions, plus tripods and `H_n`.
//! * [`recognition`]: nice partitions, the eleven forbidden graphs of Q*,
//!   tripod forests and `Z_k`.
//! * [`dichotomy`]: complexity verdicts for H-free classes.
//! * [`corpus`] and [`sweep`]: graph generators and the exhaustive
//!   cross-validation suites.

pub mod catalog;
pub mod constructions;
pub mod corpus;
pub mod dichotomy;
pub mod domination;
pub mod error;
pub mod formats;
pub mod graph;
pub mod induced;
pub mod recognition;
pub mod set;
pub mod sweep;
pub mod two_k2;

pub use error::{Error, Result};
pub use graph::{Girth, Graph};
pub use set::VertexSet;
