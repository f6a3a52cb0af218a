//! Exact counting of independent sets in graphs — the Merrifield-Simmons
//! index, also known as the Fibonacci number of a graph.
//!
//! The crate is organized around a small immutable [`graph::Graph`] type and
//! an exact counting engine ([`count`]) whose results are arbitrary-precision
//! integers. On top of those sit:
//!
//! - [`generators`]: deterministic builders for the graph families the rest
//!   of the crate reasons about (paths, cycles, stars, caterpillars,
//!   unicyclic `H_{n,k}`, perfect-matching extremal trees, and linear
//!   benzenoid chains with their labeled attachment vertices);
//! - [`bounds`]: closed-form values and upper/lower bounds for trees,
//!   unicyclic graphs, bipartite graphs and caterpillars, each packaged as a
//!   [`bounds::BoundReport`] comparing the bound against the exact count;
//! - [`benzenoid`]: transfer recurrences and exact quadratic-field closed
//!   forms for linear chains of hexagons and even s-gons, plus the two
//!   composition formulas for L- and R-shaped benzenoids;
//! - [`trees`]: exhaustive enumeration of non-isomorphic free trees and the
//!   value spectrum `i(T)` over all small trees;
//! - [`constructible`]: the rooting/merging search for tree-constructible
//!   numbers, exact decision procedures, witnesses, and the `2^t a + b`
//!   decomposition.
//!
//! Every count is exact: no floating point is used anywhere in a counting
//! path. Brute-force subset enumeration is kept as an independent oracle for
//! everything the cleverer routines compute.

pub mod benzenoid;
pub mod bounds;
pub mod constructible;
pub mod count;
pub mod generators;
pub mod graph;
pub mod trees;

mod error;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative count. All independent-set counts grow
/// exponentially in the graph order, so nothing narrower is safe.
pub type BigCount = num_bigint::BigUint;
