//! Plain-text rendering of a global picture.

use std::fmt::Write;

use sl3_lamination::{GlobalPicture, HoneycombOrient, LaminationError, Orient};
use sl3_rational::fmt_q;
use sl3_surface::Triangulation;

pub const HEADER: &str = "# sl3 global picture\n";

/// Per-triangle blocks (honeycomb, corner arcs from the marked point
/// outwards), then the pairing table and puncture signs. Empty parts are
/// omitted.
pub fn emit_diagram(t: &Triangulation, p: &GlobalPicture) -> Result<String, LaminationError> {
    p.validate(t)?;
    let mut s = String::from(HEADER);
    for (ti, tp) in p.triangles.iter().enumerate() {
        if tp.honeycomb.is_none() && tp.corners.iter().all(|c| c.is_empty()) {
            continue;
        }
        writeln!(s, "triangle {}", t.triangles[ti].id).unwrap();
        if let Some(h) = &tp.honeycomb {
            let o = match h.orient {
                HoneycombOrient::Sink => "sink",
                HoneycombOrient::Source => "source",
            };
            write!(s, "  {o} honeycomb h={}", h.height).unwrap();
            if h.weight != num_traits::One::one() {
                write!(s, " w={}", fmt_q(&h.weight)).unwrap();
            }
            s.push('\n');
        }
        for (c, arcs) in tp.corners.iter().enumerate() {
            if arcs.is_empty() {
                continue;
            }
            let v = &t.vertices[t.corner_vertex(ti, c)].id;
            write!(s, "  corner {c} ({v}):").unwrap();
            for a in arcs {
                let o = match a.orient {
                    Orient::Cw => "cw",
                    Orient::Ccw => "ccw",
                };
                write!(s, " {o}").unwrap();
                if a.weight != num_traits::One::one() {
                    write!(s, "*{}", fmt_q(&a.weight)).unwrap();
                }
            }
            s.push('\n');
        }
    }
    let paired: Vec<usize> = (0..t.num_edges()).filter(|&e| !p.pairings[e].is_empty()).collect();
    if !paired.is_empty() {
        s.push_str("pairings\n");
        for e in paired {
            write!(s, "  {} ({}):", t.edges[e].id, p.pairings[e].len()).unwrap();
            for (a, b) in &p.pairings[e] {
                write!(s, " {a}-{b}").unwrap();
            }
            s.push('\n');
        }
    }
    if !p.puncture_signs.is_empty() {
        s.push_str("puncture signs\n");
        for ps in &p.puncture_signs {
            let sign = if ps.sign > 0 { '+' } else { '-' };
            writeln!(s, "  {} side {} strand {}: {sign}", t.triangles[ps.tri].id, ps.side, ps.strand).unwrap();
        }
    }
    Ok(s)
}
