use std::collections::{BTreeMap, HashMap, HashSet};

use crate::doc::*;
use crate::SurfaceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Side {
    pub edge: usize,
    /// The ccw traversal of the triangle runs against the edge orientation.
    pub reversed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub id: String,
    pub sides: [Side; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub kind: EdgeKind,
    pub init: usize,
    pub term: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub class: VertexClass,
}

/// A side slot: triangle index and side index within it.
pub type Slot = (usize, usize);

/// A validated ideal triangulation without self-folded triangles.
///
/// Side `i` of a triangle runs from corner `i` to corner `i+1`
/// counterclockwise. For an interior edge, `left` is the slot traversing it
/// forward (the triangle on its left, `T_L`) and `right` the other one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub triangles: Vec<Triangle>,
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
    left: Vec<Slot>,
    right: Vec<Option<Slot>>,
}

/// The quadrilateral around an interior edge `E`, oriented bottom to top.
///
/// `T_L = (bottom, top, left)` and `T_R = (top, bottom, right)` in ccw order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub edge: usize,
    pub tl: usize,
    pub il: usize,
    pub tr: usize,
    pub ir: usize,
    /// top -> left, in `T_L`
    pub a: Slot,
    /// left -> bottom, in `T_L`
    pub b: Slot,
    /// bottom -> right, in `T_R`
    pub c: Slot,
    /// right -> top, in `T_R`
    pub d: Slot,
    pub bottom: usize,
    pub top: usize,
    pub left: usize,
    pub right: usize,
}

impl Triangulation {
    pub fn from_doc(doc: &TriangulationDoc) -> Result<Self, SurfaceError> {
        let (t, diags) = analyze(doc);
        if diags.is_empty() {
            Ok(t.expect("no diagnostics implies a parsed table"))
        } else if diags.iter().any(|d| d.starts_with("self-folded")) {
            Err(SurfaceError::SelfFoldedUnavoidable(diags.join("; ")))
        } else {
            Err(SurfaceError::InvalidTable(diags))
        }
    }

    /// Assemble from already-indexed parts; the result is re-validated.
    pub fn from_parts(
        triangles: Vec<Triangle>,
        edges: Vec<Edge>,
        vertices: Vec<Vertex>,
    ) -> Result<Self, SurfaceError> {
        let doc = to_doc_parts(&triangles, &edges, &vertices);
        Self::from_doc(&doc)
    }

    pub fn to_doc(&self) -> TriangulationDoc {
        to_doc_parts(&self.triangles, &self.edges, &self.vertices)
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_interior_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Interior).count()
    }

    pub fn num_boundary_edges(&self) -> usize {
        self.edges.len() - self.num_interior_edges()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_punctures(&self) -> usize {
        self.vertices.iter().filter(|v| v.class == VertexClass::Puncture).count()
    }

    pub fn num_special(&self) -> usize {
        self.vertices.len() - self.num_punctures()
    }

    /// Euler characteristic of the surface with punctures removed.
    pub fn euler_char(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
            - self.num_punctures() as i64
    }

    pub fn is_interior(&self, e: usize) -> bool {
        self.edges[e].kind == EdgeKind::Interior
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn triangle_index(&self, id: &str) -> Option<usize> {
        self.triangles.iter().position(|t| t.id == id)
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_by_id(&self, id: &str) -> Result<usize, SurfaceError> {
        self.edge_index(id)
            .ok_or_else(|| SurfaceError::UnknownEdge(id.to_string()))
    }

    /// Forward slot of an edge (the only slot of a boundary interval).
    pub fn left_slot(&self, e: usize) -> Slot {
        self.left[e]
    }

    pub fn right_slot(&self, e: usize) -> Option<Slot> {
        self.right[e]
    }

    pub fn side(&self, (t, i): Slot) -> Side {
        self.triangles[t].sides[i]
    }

    /// The slot across the edge from `slot`, if the edge is interior.
    pub fn across(&self, slot: Slot) -> Option<Slot> {
        let e = self.side(slot).edge;
        if self.left[e] == slot {
            self.right[e]
        } else {
            Some(self.left[e])
        }
    }

    /// Marked point at corner `c` of triangle `t` (the initial point of side `c`).
    pub fn corner_vertex(&self, t: usize, c: usize) -> usize {
        let s = self.triangles[t].sides[c % 3];
        let e = &self.edges[s.edge];
        if s.reversed {
            e.term
        } else {
            e.init
        }
    }

    pub fn quad(&self, e: usize) -> Option<Quad> {
        let (tl, il) = self.left[e];
        let (tr, ir) = self.right[e]?;
        Some(Quad {
            edge: e,
            tl,
            il,
            tr,
            ir,
            a: (tl, (il + 1) % 3),
            b: (tl, (il + 2) % 3),
            c: (tr, (ir + 1) % 3),
            d: (tr, (ir + 2) % 3),
            bottom: self.edges[e].init,
            top: self.edges[e].term,
            left: self.corner_vertex(tl, il + 2),
            right: self.corner_vertex(tr, ir + 2),
        })
    }

    /// Corners at a marked point, ordered counterclockwise around it.
    ///
    /// For a special point the walk starts at the corner whose side `c` is a
    /// boundary interval, so the list runs from the interval leaving the point
    /// to the one arriving at it.
    pub fn corners_around(&self, v: usize) -> Vec<Slot> {
        let all: Vec<Slot> = (0..self.triangles.len())
            .flat_map(|t| (0..3).map(move |c| (t, c)))
            .filter(|&(t, c)| self.corner_vertex(t, c) == v)
            .collect();
        if all.is_empty() {
            return all;
        }
        let start = all
            .iter()
            .copied()
            .find(|&(t, c)| !self.is_interior(self.triangles[t].sides[c].edge))
            .unwrap_or(all[0]);
        // ccw around v: leave through side c-1 (which ends at v) into the
        // neighbour; there v is the initial point of the entered side.
        let mut out = vec![start];
        let mut cur = start;
        loop {
            let prev_side = (cur.0, (cur.1 + 2) % 3);
            match self.across(prev_side) {
                Some((t2, s2)) => {
                    let next = (t2, s2);
                    if next == start {
                        break;
                    }
                    out.push(next);
                    cur = next;
                }
                None => break,
            }
        }
        out
    }

    /// Triangle indices grouped into connected components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.triangles.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(t) = stack.pop() {
                comp.push(t);
                for i in 0..3 {
                    if let Some((u, _)) = self.across((t, i)) {
                        if !seen[u] {
                            seen[u] = true;
                            stack.push(u);
                        }
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Replace ids by `T0..`, `E0..`, `v0..` in storage order.
    pub fn relabeled(&self) -> Triangulation {
        let mut t = self.clone();
        for (i, x) in t.triangles.iter_mut().enumerate() {
            x.id = format!("T{i}");
        }
        for (i, x) in t.edges.iter_mut().enumerate() {
            x.id = format!("E{i}");
        }
        for (i, x) in t.vertices.iter_mut().enumerate() {
            x.id = format!("v{i}");
        }
        t
    }
}

fn to_doc_parts(triangles: &[Triangle], edges: &[Edge], vertices: &[Vertex]) -> TriangulationDoc {
    TriangulationDoc {
        triangles: triangles
            .iter()
            .map(|t| TriangleDoc {
                id: t.id.clone(),
                sides: t.sides.map(|s| side_ref(&edges[s.edge].id, s.reversed)),
            })
            .collect(),
        edges: edges
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                kind: e.kind,
                orientation: [vertices[e.init].id.clone(), vertices[e.term].id.clone()],
            })
            .collect(),
        vertices: vertices
            .iter()
            .map(|v| VertexDoc {
                id: v.id.clone(),
                class: v.class,
            })
            .collect(),
    }
}

/// List every violated triangulation invariant; empty means valid.
pub fn validate(doc: &TriangulationDoc) -> Vec<String> {
    analyze(doc).1
}

fn dupes<'a>(what: &str, ids: impl Iterator<Item = &'a String>, diags: &mut Vec<String>) {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            diags.push(format!("duplicate {what} id {id}"));
        }
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

fn analyze(doc: &TriangulationDoc) -> (Option<Triangulation>, Vec<String>) {
    let mut diags = Vec::new();
    if doc.triangles.is_empty() {
        diags.push("triangulation has no triangles".to_string());
        return (None, diags);
    }
    dupes("triangle", doc.triangles.iter().map(|t| &t.id), &mut diags);
    dupes("edge", doc.edges.iter().map(|e| &e.id), &mut diags);
    dupes("vertex", doc.vertices.iter().map(|v| &v.id), &mut diags);
    if !diags.is_empty() {
        return (None, diags);
    }
    let vidx: HashMap<&str, usize> = doc
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.id.as_str(), i))
        .collect();
    let eidx: HashMap<&str, usize> = doc
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.id.as_str(), i))
        .collect();

    let mut edges = Vec::new();
    for e in &doc.edges {
        if e.id.starts_with('-') {
            diags.push(format!("edge id {} must not start with '-'", e.id));
        }
        let ends: Vec<Option<usize>> = e
            .orientation
            .iter()
            .map(|v| vidx.get(v.as_str()).copied())
            .collect();
        for (v, i) in e.orientation.iter().zip(&ends) {
            if i.is_none() {
                diags.push(format!("edge {} refers to unknown vertex {v}", e.id));
            }
        }
        edges.push(Edge {
            id: e.id.clone(),
            kind: e.kind,
            init: ends[0].unwrap_or(0),
            term: ends[1].unwrap_or(0),
        });
    }

    let mut triangles = Vec::new();
    for t in &doc.triangles {
        let mut sides = [Side {
            edge: 0,
            reversed: false,
        }; 3];
        for (i, r) in t.sides.iter().enumerate() {
            let (id, reversed) = parse_side_ref(r);
            match eidx.get(id) {
                Some(&e) => sides[i] = Side { edge: e, reversed },
                None => diags.push(format!("triangle {} refers to unknown edge {id}", t.id)),
            }
        }
        triangles.push(Triangle {
            id: t.id.clone(),
            sides,
        });
    }
    if !diags.is_empty() {
        return (None, diags);
    }

    for t in &triangles {
        let e: Vec<usize> = t.sides.iter().map(|s| s.edge).collect();
        if e[0] == e[1] || e[1] == e[2] || e[0] == e[2] {
            diags.push(format!("self-folded triangle at {}", t.id));
        }
    }

    let mut fwd: Vec<Vec<Slot>> = vec![Vec::new(); edges.len()];
    let mut bwd: Vec<Vec<Slot>> = vec![Vec::new(); edges.len()];
    for (ti, t) in triangles.iter().enumerate() {
        for (i, s) in t.sides.iter().enumerate() {
            if s.reversed {
                bwd[s.edge].push((ti, i));
            } else {
                fwd[s.edge].push((ti, i));
            }
        }
    }
    let mut left = vec![(0, 0); edges.len()];
    let mut right = vec![None; edges.len()];
    for (i, e) in edges.iter().enumerate() {
        match e.kind {
            EdgeKind::Interior => {
                if fwd[i].len() != 1 || bwd[i].len() != 1 {
                    diags.push(format!(
                        "interior edge {} must be used once in each direction (found {} forward, {} reversed)",
                        e.id,
                        fwd[i].len(),
                        bwd[i].len()
                    ));
                } else {
                    left[i] = fwd[i][0];
                    right[i] = Some(bwd[i][0]);
                }
            }
            EdgeKind::Boundary => {
                if !bwd[i].is_empty() {
                    diags.push(format!(
                        "boundary interval {} must be oriented along the boundary (triangle on its left)",
                        e.id
                    ));
                } else if fwd[i].len() != 1 {
                    diags.push(format!(
                        "boundary interval {} must be used by exactly one triangle side (found {})",
                        e.id,
                        fwd[i].len()
                    ));
                } else {
                    left[i] = fwd[i][0];
                }
            }
        }
    }
    if !diags.is_empty() {
        return (None, diags);
    }

    let start = |s: &Side| if s.reversed { edges[s.edge].term } else { edges[s.edge].init };
    let end = |s: &Side| if s.reversed { edges[s.edge].init } else { edges[s.edge].term };
    for t in &triangles {
        for i in 0..3 {
            let (s, n) = (&t.sides[i], &t.sides[(i + 1) % 3]);
            if end(s) != start(n) {
                diags.push(format!(
                    "triangle {}: sides {i} and {} do not meet at a common vertex",
                    t.id,
                    (i + 1) % 3
                ));
            }
        }
    }
    if !diags.is_empty() {
        return (None, diags);
    }

    // Corners glued across interior edges are the same marked point.
    let nc = 3 * triangles.len();
    let mut dsu = Dsu((0..nc).collect());
    for e in 0..edges.len() {
        if let Some((tr, ir)) = right[e] {
            let (tl, il) = left[e];
            dsu.union(3 * tl + il, 3 * tr + (ir + 1) % 3);
            dsu.union(3 * tl + (il + 1) % 3, 3 * tr + ir);
        }
    }
    let mut class_of_vertex: BTreeMap<usize, HashSet<usize>> = BTreeMap::new();
    for (ti, t) in triangles.iter().enumerate() {
        for c in 0..3 {
            let v = start(&t.sides[c]);
            class_of_vertex
                .entry(v)
                .or_default()
                .insert(dsu.find(3 * ti + c));
        }
    }
    for (v, vx) in doc.vertices.iter().enumerate() {
        match class_of_vertex.get(&v) {
            None => diags.push(format!("vertex {} is not a corner of any triangle", vx.id)),
            Some(cls) if cls.len() > 1 => diags.push(format!(
                "vertex {} splits into {} distinct marked points",
                vx.id,
                cls.len()
            )),
            _ => {}
        }
    }
    let mut on_boundary = vec![false; doc.vertices.len()];
    for e in edges.iter().filter(|e| e.kind == EdgeKind::Boundary) {
        on_boundary[e.init] = true;
        on_boundary[e.term] = true;
    }
    for (v, vx) in doc.vertices.iter().enumerate() {
        let want = if on_boundary[v] {
            VertexClass::Special
        } else {
            VertexClass::Puncture
        };
        if vx.class != want {
            diags.push(format!(
                "vertex {} is classed {:?} but should be {:?}",
                vx.id, vx.class, want
            ));
        }
    }

    let nv = doc.vertices.len() as i64;
    let np = doc
        .vertices
        .iter()
        .filter(|v| v.class == VertexClass::Puncture)
        .count() as i64;
    let ms = nv - np;
    let chi = nv - edges.len() as i64 + triangles.len() as i64 - np;
    if edges.len() as i64 != -3 * chi + 2 * ms {
        diags.push("edge-count identity violated".to_string());
    }
    if triangles.len() as i64 != -2 * chi + ms {
        diags.push("triangle-count identity violated".to_string());
    }
    if !diags.is_empty() {
        return (None, diags);
    }

    let vertices = doc
        .vertices
        .iter()
        .map(|v| Vertex {
            id: v.id.clone(),
            class: v.class,
        })
        .collect();
    (
        Some(Triangulation {
            triangles,
            edges,
            vertices,
            left,
            right,
        }),
        diags,
    )
}
