//! Cordial, product-cordial and (2,3)-orientable graphs on small vertex sets.
//!
//! Graphs are edge bitsets over a fixed lexicographic slot order (see
//! [`graph`]). On top of that sit exact checkers with witnesses
//! ([`labeling`]), extremal edge-count searches ([`extremal`]) and brute-force
//! machinery for linear operators on the graph semimodule ([`preserver`]).
//!
//! The `parallel` feature (on by default) runs the exhaustive loops on rayon.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod labeling;
pub mod par;
pub mod preserver;

pub use canon::{canonical_form, canonical_graph, CanonicalKey};
pub use enumerate::enumerate_graphs;
pub use error::{CordialError, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use labeling::{Orientation, Property, Verdict, VertexLabeling};
pub use preserver::LinearOperator;
