//! Integral and rational sl3-laminations on a triangulated marked surface:
//! global pictures, elementary component sums, shear coordinates and
//! A-coordinates.

pub mod components;
mod doc;
mod picture;
mod shear;

use num_traits::Zero;
use sl3_rational::Q;
use sl3_surface::Triangulation;

pub use components::{Component, ComponentKind, ComponentSum};
pub use doc::*;
pub use picture::*;
pub use shear::{a_coords, boundary_alpha, face_coordinate, shear_frozen, shear_unfrozen};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaminationError {
    #[error("InvalidPicture: {0}")]
    InvalidPicture(String),
    #[error("UnknownComponentKind: {0}")]
    UnknownComponentKind(String),
    #[error("CarrierMismatch: {0}")]
    CarrierMismatch(String),
    #[error("NegativeNonPeripheralWeight: {0}")]
    NegativeNonPeripheralWeight(String),
    #[error("NotBounded: {0}")]
    NotBounded(String),
    #[error("NonIntegral: {0}")]
    NonIntegral(String),
    #[error("UnknownId: {0}")]
    UnknownId(String),
    #[error(transparent)]
    Tropical(#[from] sl3_tropical::TropicalError),
    #[error(transparent)]
    Surface(#[from] sl3_surface::SurfaceError),
}

/// A global picture together with pinnings `δ = (δ⁺, δ⁻)`, indexed by edge
/// and zero on interior edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinnedLamination {
    pub picture: GlobalPicture,
    pub delta: Vec<[Q; 2]>,
}

impl PinnedLamination {
    pub fn new(picture: GlobalPicture, t: &Triangulation) -> Self {
        PinnedLamination {
            picture,
            delta: vec![[Q::zero(), Q::zero()]; t.num_edges()],
        }
    }

    /// Orientation reversal; `δ⁺` and `δ⁻` trade places.
    pub fn dynkin(&self) -> Self {
        PinnedLamination {
            picture: self.picture.dynkin(),
            delta: self.delta.iter().map(|[p, m]| [m.clone(), p.clone()]).collect(),
        }
    }
}
