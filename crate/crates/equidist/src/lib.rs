//! Equidistant numbers of graphs.
//!
//! A set of vertices is *t-equidistant* if every pair lies at graph distance
//! exactly `t`; the *t-equidistant number* `eq_t(G)` is the size of a largest
//! such set, and `eq(G)` is the maximum of `eq_t(G)` over `1 ≤ t ≤ diam(G)`.
//! Equivalently, `eq_t(G)` is the clique number of the exact distance power
//! `G^[#t]`, the graph joining exactly the pairs at distance `t`.
//!
//! The crate provides:
//!
//! * [`graph`] — a dense simple-graph type, graph6 ingestion ([`graph6`]),
//!   named constructors ([`named`]), BFS distance matrices and the graph
//!   transforms everything else is built from (exact distance powers,
//!   ordinary powers, complements, joins, chained copies).
//! * [`exact`] — exponential-time but desk-scale exact solvers for clique,
//!   `t`-independence and equidistant numbers, with witnesses.
//! * [`spectra`] — a dense cyclic-Jacobi eigensolver for the adjacency,
//!   Laplacian and distance matrices.
//! * [`bounds`] — the closed-form eigenvalue upper bounds on `eq_t` and `eq`,
//!   with explicit applicability gating.
//! * [`polyopt`] — a small two-phase simplex core and the polynomial
//!   optimization (LP / enumerated MILP) of the inertial- and ratio-type
//!   bounds.
//! * [`reductions`] — split-graph recognition and the NP-hardness gadget
//!   constructions, plus an empirical verification harness.
//!
//! The `equidist` CLI (a separate crate) exposes the same operations and
//! reproduces the bound-comparison tables; the `book/` directory of the
//! repository is an mdBook walking through the concepts, whose code snippets
//! compile as doc-tests of this crate.

pub mod bounds;
pub mod corpus;
mod error;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod polyopt;
pub mod reductions;
pub mod spectra;

mod book;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
