//! Juncture of directed acyclic graphs with west and east boundaries.
//!
//! The crate builds up from validated graphs ([`graph`]) through the juncture
//! operation and its inverse ([`juncture`]), the grounding predicates used to
//! decide which graphs admit a disk drawing ([`grounding`], [`pgraph`]), list
//! rewriting by pivots ([`pivots`]), three equational term calculi
//! ([`terms`]) and the combinatorial geometry of disk realizations and
//! duals ([`geometry`]).

pub mod caps;
pub mod edge_graph;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod gen;
pub mod geometry;
pub mod graph;
pub mod grounding;
pub mod juncture;
pub mod lists;
pub mod pgraph;
pub mod pivots;
pub mod terms;

pub use caps::Caps;
pub use edge_graph::EdgeGraph;
pub use error::{Error, Result};
pub use graph::{Graph, Semipath, Side};
