//! Exact recognition of perfect graphs and of five classes generalizing
//! them (2-perfect, perfectly divisible, nice, stable-perfect, 2-divisible),
//! with machine-checkable certificates, isomorph-free enumeration of small
//! graphs, and exhaustive verification suites over those enumerations.
//!
//! All graphs have at most 30 vertices and are stored as per-vertex
//! adjacency bitmasks; every checker is exact and exponential.

pub mod certificate;
pub mod classes;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod named;
pub mod perfection;
pub mod verifier;

pub use certificate::{Certificate, Class, ClassVerdict, PropertyReport};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, VertexSet, MAX_VERTICES};
pub use invariants::SubsetCache;
