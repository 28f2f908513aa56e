//! Constructions and exact verification for mixed graphs of small girth.
//!
//! A mixed graph has undirected edges and directed arcs; a `[z,r;g]`-mixed
//! graph has `z` in-arcs, `z` out-arcs and `r` edges at every vertex and
//! shortest mixed cycle of length `g`. The crate builds the projective and
//! biaffine incidence graphs, circulant digraphs, the girth-6 family
//! `G_{p,q}`, the 30-vertex `[1,3;6]` cage and the lower-bound witness, and
//! checks their parameters exactly.

pub mod analysis;
pub mod cli;
pub mod field;
pub mod generators;
pub mod graph;
pub mod io;

pub use analysis::{girth, verify_zrg, Girth, GirthReport, VerificationReport};
pub use field::{Field, FieldElement, FieldError};
pub use graph::{DegreeProfile, Degrees, GraphError, MixedGraph, VertexLabel};
