//! Marked surfaces and their ideal triangulations.
//!
//! Triangulations are abstract gluing tables: triangles list their three
//! sides counterclockwise, each side naming an edge and whether the ccw
//! traversal agrees with the edge's orientation. Self-folded triangles are
//! not representable.

mod build;
mod canon;
mod doc;
mod ops;
mod tri;

pub use build::{build, check_conditions, MarkedSurfaceSpec};
pub use canon::{canonical_form, isomorphic};
pub use doc::*;
pub use ops::{disjoint_union, flip_edge, glue_boundary, EdgeCorrespondence, GlueMaps};
pub use tri::{validate, Edge, Quad, Side, Slot, Triangle, Triangulation, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    S1,
    S2,
    S3,
    S4,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("SpecViolatesSurfaceConditions({0:?}): {1}")]
    SpecViolatesSurfaceConditions(Condition, String),
    #[error("SelfFoldedUnavoidable: {0}")]
    SelfFoldedUnavoidable(String),
    #[error("InvalidTable: {}", .0.join("; "))]
    InvalidTable(Vec<String>),
    #[error("UnknownEdge: {0}")]
    UnknownEdge(String),
    #[error("NotInteriorEdge: {0}")]
    NotInteriorEdge(String),
    #[error("NotBoundaryEdge: {0}")]
    NotBoundaryEdge(String),
    #[error("FlipCreatesSelfFolded: {0}")]
    FlipCreatesSelfFolded(String),
    #[error("SameEdge: {0}")]
    SameEdge(String),
    #[error("ResultViolatesSurfaceConditions: {0}")]
    ResultViolatesSurfaceConditions(String),
}
