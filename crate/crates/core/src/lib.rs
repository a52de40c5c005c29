//! Mutual-visibility sets in finite simple undirected graphs.
//!
//! Two vertices of a point set `P` are *mutually visible* when some shortest
//! path between them has no other member of `P` in its interior. A point set
//! is a *mutual-visibility set* when all of its members see each other, and
//! the *mutual-visibility number* `μ(G)` is the size of a largest one.
//!
//! The crate is `no_std` (it needs `alloc`) and covers:
//!
//! - [`graph`]: the immutable [`Graph`] type plus BFS, components, blocks,
//!   geodesic intervals and hulls, twins and cograph recognition;
//! - [`visibility`]: the `O(|P|(|V|+|E|))` verifier and pairwise queries;
//! - [`solver`]: exhaustive and branch-and-bound computation of `μ(G)`;
//! - [`classes`]: closed forms with constructive witnesses for the graph
//!   classes where `μ` is known;
//! - [`reduction`]: the 3SAT gadget construction and its bound certificate;
//! - [`generators`]: deterministic and seeded-random graph families.
//!
//! Wall-clock budgets, threads and file formats live in the `mutvis` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod bits;
pub mod classes;
pub mod generators;
pub mod graph;
mod pointset;
pub mod reduction;
pub mod solver;
pub mod visibility;

pub use graph::{Distance, Graph, GraphError, Vertex, UNREACHABLE};
pub use pointset::{PointSet, PointSetError};
pub use visibility::is_mv_set;
