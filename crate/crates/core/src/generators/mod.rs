//! Constructions of every graph in the toolkit. Each generator is a pure
//! function of its parameters and returns a canonical [`MixedGraph`].

mod cage;
mod circulant;
mod family;
mod incidence;
mod tree;

use thiserror::Error;

use crate::field::FieldError;
use crate::graph::GraphError;

pub use cage::{apply_surgery, cage_136_script, gen_cage_136, SurgeryStep};
pub use circulant::{gen_bipartite_circulant, gen_circulant, Side};
pub use family::{family_six_cycle, gen_family, gen_family_with_jumps, FamilyParams};
pub use incidence::{gen_biaffine, gen_projective_incidence, non_affine_vertices};
pub use tree::{gen_lower_bound_witness, gen_moore_tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("q = {0} must be a prime >= 3")]
    NotOddPrime(u32),
    #[error("invalid jump {jump}: {reason}")]
    InvalidJump { jump: u32, reason: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("surgery step {step} failed: {source}")]
    Surgery { step: usize, source: GraphError },
}

pub type Result<T> = std::result::Result<T, GeneratorError>;
