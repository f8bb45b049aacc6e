use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexClass {
    Puncture,
    Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Interior,
    Boundary,
}

/// Wire form of a triangulation.
///
/// Side references are edge ids; a leading `-` means the counterclockwise
/// traversal of the triangle runs against the edge's orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationDoc {
    pub triangles: Vec<TriangleDoc>,
    pub edges: Vec<EdgeDoc>,
    pub vertices: Vec<VertexDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub id: String,
    pub sides: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: String,
    pub kind: EdgeKind,
    pub orientation: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    pub class: VertexClass,
}

/// Split a side reference into `(edge id, reversed)`.
pub fn parse_side_ref(s: &str) -> (&str, bool) {
    match s.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (s, false),
    }
}

pub fn side_ref(edge: &str, reversed: bool) -> String {
    if reversed {
        format!("-{edge}")
    } else {
        edge.to_string()
    }
}
