use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::doc::*;
use crate::ops::glue_boundary;
use crate::tri::*;
use crate::{Condition, SurfaceError};

/// Generators for the supported families of marked surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum MarkedSurfaceSpec {
    Polygon { k: usize },
    PuncturedPolygon { k: usize, p: usize },
    Annulus { m1: usize, m2: usize },
    OncePuncturedTorus,
    Explicit { table: TriangulationDoc },
}

impl fmt::Display for MarkedSurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Polygon { k } => write!(f, "polygon:{k}"),
            Self::PuncturedPolygon { k, p } => write!(f, "punctured-polygon:{k},{p}"),
            Self::Annulus { m1, m2 } => write!(f, "annulus:{m1},{m2}"),
            Self::OncePuncturedTorus => write!(f, "torus"),
            Self::Explicit { .. } => write!(f, "explicit"),
        }
    }
}

/// Parses the short forms `polygon:4`, `triangle`, `punctured-polygon:3,1`,
/// `annulus:1,2` and `torus`.
impl FromStr for MarkedSurfaceSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Result<Vec<usize>, _> = args
            .split(',')
            .filter(|a| !a.trim().is_empty())
            .map(|a| a.trim().parse::<usize>())
            .collect();
        let nums = nums.map_err(|_| format!("bad surface arguments in {s:?}"))?;
        match (name.trim(), nums.as_slice()) {
            ("triangle", []) => Ok(Self::Polygon { k: 3 }),
            ("quadrilateral", []) => Ok(Self::Polygon { k: 4 }),
            ("polygon", [k]) => Ok(Self::Polygon { k: *k }),
            ("punctured-polygon", [k]) => Ok(Self::PuncturedPolygon { k: *k, p: 1 }),
            ("punctured-polygon", [k, p]) => Ok(Self::PuncturedPolygon { k: *k, p: *p }),
            ("annulus", [m1, m2]) => Ok(Self::Annulus { m1: *m1, m2: *m2 }),
            ("torus" | "once-punctured-torus", []) => Ok(Self::OncePuncturedTorus),
            _ => Err(format!("unknown surface spec {s:?}")),
        }
    }
}

/// Check (S1)-(S4) for a connected surface of genus `g` with `b` boundary
/// components carrying `marked` special points in total and `p` punctures.
pub fn check_conditions(
    g: usize,
    boundary_marks: &[usize],
    p: usize,
) -> Result<(), (Condition, String)> {
    if let Some(i) = boundary_marks.iter().position(|&m| m == 0) {
        return Err((Condition::S1, format!("boundary component {i} has no marked point")));
    }
    let b = boundary_marks.len() as i64;
    let ms: i64 = boundary_marks.iter().map(|&m| m as i64).sum();
    let chi = 2 - 2 * g as i64 - b - p as i64;
    if -3 * chi + 2 * ms <= 0 {
        return Err((Condition::S2, format!("-3*chi + 2*|M_b| = {} is not positive", -3 * chi + 2 * ms)));
    }
    if g == 0 && b == 1 && p == 0 && ms == 2 {
        return Err((Condition::S3, "biangle".to_string()));
    }
    if g == 0 && b == 1 && p == 1 && ms == 1 {
        return Err((Condition::S4, "once-punctured monogon".to_string()));
    }
    Ok(())
}

fn violates(c: (Condition, String)) -> SurfaceError {
    SurfaceError::SpecViolatesSurfaceConditions(c.0, c.1)
}

pub fn build(spec: &MarkedSurfaceSpec) -> Result<Triangulation, SurfaceError> {
    match spec {
        MarkedSurfaceSpec::Polygon { k } => {
            check_conditions(0, &[*k], 0).map_err(violates)?;
            Ok(polygon(*k))
        }
        MarkedSurfaceSpec::PuncturedPolygon { k, p } => {
            check_conditions(0, &[*k], *p).map_err(violates)?;
            // Glue p pairs of adjacent sides of a (k+2p)-gon around v0.
            let n = k + 2 * p;
            let mut t = polygon(n);
            for j in 0..*p {
                let el = format!("E{j}");
                let er = format!("E{}", n - 1 - j);
                t = glue_boundary(&t, &el, &er)?.0;
            }
            Ok(t.relabeled())
        }
        MarkedSurfaceSpec::Annulus { m1, m2 } => {
            check_conditions(0, &[*m1, *m2], 0).map_err(violates)?;
            let n = m1 + m2 + 2;
            let t = polygon(n);
            let t = glue_boundary(&t, "E0", &format!("E{}", m1 + 1))?.0;
            Ok(t.relabeled())
        }
        MarkedSurfaceSpec::OncePuncturedTorus => {
            let t = polygon(4);
            let t = glue_boundary(&t, "E0", "E2")?.0;
            let t = glue_boundary(&t, "E1", "E3")?.0;
            Ok(t.relabeled())
        }
        MarkedSurfaceSpec::Explicit { table } => Triangulation::from_doc(table),
    }
}

/// Fan triangulation of the k-gon from `v0`.
///
/// Boundary `E_i` runs `v_i -> v_{i+1}`; the diagonal `v0 -> v_i` is
/// `E_{k+i-2}`; triangle `T_{i-1}` is `(v0, v_i, v_{i+1})`.
fn polygon(k: usize) -> Triangulation {
    let vertices: Vec<Vertex> = (0..k)
        .map(|i| Vertex {
            id: format!("v{i}"),
            class: VertexClass::Special,
        })
        .collect();
    let mut edges: Vec<Edge> = (0..k)
        .map(|i| Edge {
            id: format!("E{i}"),
            kind: EdgeKind::Boundary,
            init: i,
            term: (i + 1) % k,
        })
        .collect();
    for i in 2..k - 1 {
        edges.push(Edge {
            id: format!("E{}", k + i - 2),
            kind: EdgeKind::Interior,
            init: 0,
            term: i,
        });
    }
    // side v0 -> v_i
    let spoke = |i: usize| -> Side {
        if i == 1 {
            Side { edge: 0, reversed: false }
        } else if i == k - 1 {
            Side { edge: k - 1, reversed: true }
        } else {
            Side { edge: k + i - 2, reversed: false }
        }
    };
    let triangles = (1..k - 1)
        .map(|i| {
            let out = spoke(i);
            let back = spoke(i + 1);
            Triangle {
                id: format!("T{}", i - 1),
                sides: [
                    out,
                    Side { edge: i, reversed: false },
                    Side { edge: back.edge, reversed: !back.reversed },
                ],
            }
        })
        .collect();
    Triangulation::from_parts(triangles, edges, vertices).expect("fan triangulation is valid")
}
