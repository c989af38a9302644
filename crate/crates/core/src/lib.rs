//! Exact spanning-tree machinery for small graphs.
//!
//! The crate is organised around a handful of layers:
//!
//! * [`graph`] — a simple undirected graph type with deterministic edge
//!   order, plus the constructions (join, union, complement, shifts) the
//!   rest of the crate builds on.
//! * [`linalg`] — exact determinants: fraction-free Bareiss over the
//!   integers and pivoted elimination over the rationals.
//! * [`count`] — spanning-tree counts via the matrix-tree theorem, an
//!   independent brute-force oracle, and a factorised count for
//!   generalized joins.
//! * [`weighted`] / [`reduce`] — weighted multigraphs and the classical
//!   electrical reductions (parallel, serial, mesh-to-star) with a
//!   multiplier ledger so the spanning-tree count is recoverable at every
//!   step.
//! * [`extremal`] — closed-form counts and builders for the extremal
//!   families (clique joins, M-graphs, B-graphs, near-balanced bipartite
//!   graphs) and the associated upper bounds.
//! * [`search`] — exhaustive enumeration of connectivity classes,
//!   maximizer censuses, and bound verification.

pub mod connectivity;
pub mod count;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod reduce;
pub mod search;
pub mod weighted;

pub use count::{tau, tau_oracle, tau_weighted, TreeCount};
pub use graph::{Graph, GraphError};
pub use weighted::WeightedGraph;
