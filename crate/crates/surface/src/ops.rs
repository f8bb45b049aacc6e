use std::collections::BTreeMap;

use crate::doc::*;
use crate::tri::*;
use crate::SurfaceError;

/// Old edge ids to new edge ids across a flip. The flipped edge keeps its id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCorrespondence {
    pub map: BTreeMap<String, String>,
    pub flipped: String,
}

/// Result bookkeeping of [`glue_boundary`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueMaps {
    /// Id of the new interior edge (the id of `eL`, with its orientation).
    pub edge: String,
    /// Old vertex id to merged vertex id.
    pub vertices: BTreeMap<String, String>,
    /// Old edge id to new edge id (`eR` maps to the new edge).
    pub edges: BTreeMap<String, String>,
}

/// Replace the interior edge by the other diagonal of its quadrilateral.
///
/// The new edge runs from the apex of `T_L` to the apex of `T_R`. Triangle
/// `T_L` keeps its id and becomes the top triangle `(left, right, top)`;
/// `T_R` becomes `(right, left, bottom)`.
pub fn flip_edge(t: &Triangulation, id: &str) -> Result<(Triangulation, EdgeCorrespondence), SurfaceError> {
    let e = t.edge_by_id(id)?;
    let q = t
        .quad(e)
        .ok_or_else(|| SurfaceError::NotInteriorEdge(id.to_string()))?;
    let (sa, sb, sc, sd) = (t.side(q.a), t.side(q.b), t.side(q.c), t.side(q.d));
    if sa.edge == sd.edge || sb.edge == sc.edge {
        return Err(SurfaceError::FlipCreatesSelfFolded(id.to_string()));
    }
    let mut triangles = t.triangles.clone();
    let mut edges = t.edges.clone();
    edges[e].init = q.left;
    edges[e].term = q.right;
    triangles[q.tl].sides = [Side { edge: e, reversed: false }, sd, sa];
    triangles[q.tr].sides = [Side { edge: e, reversed: true }, sb, sc];
    let out = Triangulation::from_parts(triangles, edges, t.vertices.clone())
        .map_err(|err| SurfaceError::FlipCreatesSelfFolded(format!("{id}: {err}")))?;
    let map = t.edges.iter().map(|x| (x.id.clone(), x.id.clone())).collect();
    Ok((
        out,
        EdgeCorrespondence {
            map,
            flipped: id.to_string(),
        },
    ))
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] == x {
            x
        } else {
            let r = self.find(self.0[x]);
            self.0[x] = r;
            r
        }
    }
}

/// Identify two boundary intervals into one interior edge.
///
/// The initial point of `eL` is glued to the terminal point of `eR`; the new
/// edge keeps `eL`'s id and orientation, so `eL`'s triangle becomes `T_L`.
pub fn glue_boundary(t: &Triangulation, el: &str, er: &str) -> Result<(Triangulation, GlueMaps), SurfaceError> {
    let l = t.edge_by_id(el)?;
    let r = t.edge_by_id(er)?;
    if l == r {
        return Err(SurfaceError::SameEdge(el.to_string()));
    }
    for (i, id) in [(l, el), (r, er)] {
        if t.is_interior(i) {
            return Err(SurfaceError::NotBoundaryEdge(id.to_string()));
        }
    }

    let nv = t.vertices.len();
    let mut dsu = Dsu((0..nv).collect());
    for (a, b) in [(t.edges[l].init, t.edges[r].term), (t.edges[l].term, t.edges[r].init)] {
        let (a, b) = (dsu.find(a), dsu.find(b));
        // keep the smaller index as representative
        if a < b {
            dsu.0[b] = a;
        } else {
            dsu.0[a] = b;
        }
    }
    let reps: Vec<usize> = (0..nv).map(|v| dsu.find(v)).collect();
    let kept: Vec<usize> = (0..nv).filter(|&v| reps[v] == v).collect();
    let new_index = |v: usize| kept.iter().position(|&k| k == reps[v]).unwrap();

    let mut edge_new: Vec<Option<usize>> = Vec::with_capacity(t.edges.len());
    let mut edges = Vec::new();
    for (i, e) in t.edges.iter().enumerate() {
        if i == r {
            edge_new.push(None);
            continue;
        }
        edge_new.push(Some(edges.len()));
        edges.push(Edge {
            id: e.id.clone(),
            kind: if i == l { EdgeKind::Interior } else { e.kind },
            init: new_index(e.init),
            term: new_index(e.term),
        });
    }
    let nl = edge_new[l].unwrap();
    let triangles: Vec<Triangle> = t
        .triangles
        .iter()
        .map(|tr| Triangle {
            id: tr.id.clone(),
            sides: tr.sides.map(|s| match edge_new[s.edge] {
                Some(ne) => Side { edge: ne, reversed: s.reversed },
                None => Side { edge: nl, reversed: true },
            }),
        })
        .collect();

    let mut on_boundary = vec![false; kept.len()];
    for e in edges.iter().filter(|e| e.kind == EdgeKind::Boundary) {
        on_boundary[e.init] = true;
        on_boundary[e.term] = true;
    }
    let vertices: Vec<Vertex> = kept
        .iter()
        .enumerate()
        .map(|(i, &v)| Vertex {
            id: t.vertices[v].id.clone(),
            class: if on_boundary[i] {
                VertexClass::Special
            } else {
                VertexClass::Puncture
            },
        })
        .collect();

    let out = Triangulation::from_parts(triangles, edges, vertices.clone())
        .map_err(|err| SurfaceError::ResultViolatesSurfaceConditions(err.to_string()))?;
    let vmap = (0..nv)
        .map(|v| (t.vertices[v].id.clone(), vertices[new_index(v)].id.clone()))
        .collect();
    let emap = t
        .edges
        .iter()
        .map(|e| {
            let to = if e.id == er { el.to_string() } else { e.id.clone() };
            (e.id.clone(), to)
        })
        .collect();
    Ok((
        out,
        GlueMaps {
            edge: el.to_string(),
            vertices: vmap,
            edges: emap,
        },
    ))
}

/// Disjoint union; ids of the second operand get `suffix` appended.
pub fn disjoint_union(a: &Triangulation, b: &Triangulation, suffix: &str) -> Result<Triangulation, SurfaceError> {
    let mut doc = a.to_doc();
    let other = b.to_doc();
    let rename = |s: &str| {
        let (id, rev) = parse_side_ref(s);
        side_ref(&format!("{id}{suffix}"), rev)
    };
    for tr in &other.triangles {
        doc.triangles.push(TriangleDoc {
            id: format!("{}{suffix}", tr.id),
            sides: tr.sides.clone().map(|s| rename(&s)),
        });
    }
    for e in &other.edges {
        doc.edges.push(EdgeDoc {
            id: format!("{}{suffix}", e.id),
            kind: e.kind,
            orientation: e.orientation.clone().map(|v| format!("{v}{suffix}")),
        });
    }
    for v in &other.vertices {
        doc.vertices.push(VertexDoc {
            id: format!("{}{suffix}", v.id),
            class: v.class,
        });
    }
    Triangulation::from_doc(&doc)
}
