use sl3_surface::Triangulation;

use crate::SeedError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Index {
    /// `s` is 1 or 2.
    Edge { edge: usize, s: u8 },
    Face { tri: usize },
}

/// `I(Δ)` in a fixed order: `E:1, E:2` for every edge in storage order,
/// then the faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    pub indices: Vec<Index>,
    pub ids: Vec<String>,
    pub frozen: Vec<bool>,
    num_edges: usize,
}

impl IndexSet {
    pub fn new(t: &Triangulation) -> Self {
        let mut indices = Vec::new();
        let mut ids = Vec::new();
        let mut frozen = Vec::new();
        for (e, edge) in t.edges.iter().enumerate() {
            for s in [1u8, 2] {
                indices.push(Index::Edge { edge: e, s });
                ids.push(format!("{}:{s}", edge.id));
                frozen.push(!t.is_interior(e));
            }
        }
        for (i, tri) in t.triangles.iter().enumerate() {
            indices.push(Index::Face { tri: i });
            ids.push(tri.id.clone());
            frozen.push(false);
        }
        IndexSet {
            indices,
            ids,
            frozen,
            num_edges: t.num_edges(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn edge_pos(&self, edge: usize, s: u8) -> usize {
        2 * edge + (s as usize - 1)
    }

    pub fn face_pos(&self, tri: usize) -> usize {
        2 * self.num_edges + tri
    }

    pub fn pos(&self, i: Index) -> usize {
        match i {
            Index::Edge { edge, s } => self.edge_pos(edge, s),
            Index::Face { tri } => self.face_pos(tri),
        }
    }

    pub fn position(&self, id: &str) -> Result<usize, SeedError> {
        self.ids
            .iter()
            .position(|x| x == id)
            .ok_or_else(|| SeedError::UnknownIndex(id.to_string()))
    }

    pub fn unfrozen(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| !self.frozen[i])
    }

    pub fn num_unfrozen(&self) -> usize {
        self.frozen.iter().filter(|f| !**f).count()
    }
}
