use std::collections::VecDeque;

use crate::doc::VertexClass;
use crate::tri::Triangulation;

/// Canonical code of one connected component, rooted at `(root, rot)`.
///
/// Triangles are numbered in BFS order; each contributes, per local side,
/// the neighbour's number and entry side (or a boundary marker), plus the
/// class of the local corner.
fn rooted_code(t: &Triangulation, root: usize, rot: usize) -> Vec<i64> {
    let n = t.num_triangles();
    let mut label = vec![usize::MAX; n];
    let mut rotation = vec![0usize; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    label[root] = 0;
    rotation[root] = rot;
    order.push(root);
    queue.push_back(root);
    let mut code = Vec::new();
    while let Some(tri) = queue.pop_front() {
        for j in 0..3 {
            let side = (rotation[tri] + j) % 3;
            let corner = t.corner_vertex(tri, side);
            code.push(match t.vertices[corner].class {
                VertexClass::Puncture => -1,
                VertexClass::Special => -2,
            });
            match t.across((tri, side)) {
                None => {
                    code.push(-3);
                    code.push(-3);
                }
                Some((u, su)) => {
                    if label[u] == usize::MAX {
                        label[u] = order.len();
                        rotation[u] = su;
                        order.push(u);
                        queue.push_back(u);
                    }
                    code.push(label[u] as i64);
                    code.push(((su + 3 - rotation[u]) % 3) as i64);
                }
            }
        }
    }
    code
}

/// A string equal for two triangulations iff they are isomorphic as
/// triangulated marked surfaces (ids and edge orientations ignored).
pub fn canonical_form(t: &Triangulation) -> String {
    let mut comps: Vec<Vec<i64>> = t
        .components()
        .into_iter()
        .map(|comp| {
            comp.iter()
                .flat_map(|&root| (0..3).map(move |rot| (root, rot)))
                .map(|(root, rot)| rooted_code(t, root, rot))
                .min()
                .unwrap_or_default()
        })
        .collect();
    comps.sort();
    comps
        .iter()
        .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("|")
}

pub fn isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    canonical_form(a) == canonical_form(b)
}
