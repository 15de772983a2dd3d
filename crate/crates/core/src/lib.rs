//! Algorithms for finding pairwise non-adjacent `X`-`Y` paths.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure functions
//! over in-memory values. File formats, the command line and the threaded
//! closure driver live in the companion `induced-menger` crate.
//!
//! Layout:
//! - [`graph`]: the simple undirected [`Graph`], problem instances, path
//!   collections, matching contraction, degeneracy and path shortcutting.
//! - [`disjoint`]: vertex-disjoint path packing, separators and
//!   minimum-total-length collections via unit-capacity min-cost flow.
//! - [`colouring`]: greedy strong edge colourings and the conflict-graph
//!   partition of outside edges into at most four induced matchings.
//! - [`extract`]: the contract–Menger–lift recursion producing non-adjacent
//!   paths, the subcubic pipeline and the minor-free independent-set selection.
//! - [`pathsys`]: five-path systems, `⊕` moves, normalization and decomposition.
//! - [`search`]: states, the transition relation, the closure search over
//!   collections of states and the constructive two-path solver.
//! - [`oracle`]: brute-force ground truth used to validate everything else.

#![no_std]

extern crate alloc;

pub mod colouring;
pub mod disjoint;
pub mod error;
pub mod extract;
mod flow;
pub mod graph;
pub mod mis;
pub mod oracle;
pub mod pathsys;
pub mod search;

pub use error::{Error, Result};
pub use graph::{ContractionMap, Edge, Graph, PathCollection, ProblemInstance, Vertex};
