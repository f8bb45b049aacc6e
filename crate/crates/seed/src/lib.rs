//! The sl3 seed of an ideal triangulation.
//!
//! Every edge carries two indices (`E:1` nearer its initial point, `E:2`
//! nearer the terminal point) and every triangle one face index. Indices on
//! boundary intervals are frozen.

mod index;
mod matrix;
mod sequence;

pub use index::{Index, IndexSet};
pub use matrix::{exchange_matrix, extended_matrix, m_matrix, mutate_matrix, ExchangeMatrix, MatrixDoc};
pub use sequence::{apply_steps, dynkin_mutation_sequence, flip_mutation_sequence, FlipLabels, MutationStep};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeedError {
    #[error("FrozenIndexMutation: {0}")]
    FrozenIndexMutation(String),
    #[error("BadPermutation: {0}")]
    BadPermutation(String),
    #[error("UnknownIndex: {0}")]
    UnknownIndex(String),
    #[error(transparent)]
    Surface(#[from] sl3_surface::SurfaceError),
    #[error("QuiverMismatch: {0}")]
    QuiverMismatch(String),
}
