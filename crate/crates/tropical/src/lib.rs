//! Max-plus tropical points over the sl3 seed of a triangulation, their
//! mutations, the flip and Dynkin actions, and the ensemble map.

mod maps;
mod mutation;
mod point;

pub use maps::{dynkin_cluster, ensemble, flip_x_closed_form, flip_x_local, principal_embed};
pub use mutation::{apply_flip, transport, mutate_a, mutate_x, PLMap};
pub use point::{Kind, TropicalPoint, TropicalPointDoc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropicalError {
    #[error("FrozenIndexMutation: {0}")]
    FrozenIndexMutation(String),
    #[error("SeedMismatch: {0}")]
    SeedMismatch(String),
    #[error("BadLabeling: {0}")]
    BadLabeling(String),
    #[error("KindMismatch: expected {expected:?} point")]
    KindMismatch { expected: Kind },
    #[error(transparent)]
    Seed(#[from] sl3_seed::SeedError),
    #[error(transparent)]
    Surface(#[from] sl3_surface::SurfaceError),
}
