use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sl3_rational::{denom_lcm, Q};
use sl3_surface::{Triangulation, VertexClass};

use crate::LaminationError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orient {
    Cw,
    Ccw,
}

impl Orient {
    pub fn reversed(self) -> Self {
        match self {
            Orient::Cw => Orient::Ccw,
            Orient::Ccw => Orient::Cw,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoneycombOrient {
    Sink,
    Source,
}

impl HoneycombOrient {
    pub fn reversed(self) -> Self {
        match self {
            HoneycombOrient::Sink => HoneycombOrient::Source,
            HoneycombOrient::Source => HoneycombOrient::Sink,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Honeycomb {
    pub orient: HoneycombOrient,
    pub height: u32,
    /// Weight of every leg.
    pub weight: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerArc {
    pub orient: Orient,
    pub weight: Q,
}

impl CornerArc {
    pub fn unit(orient: Orient) -> Self {
        CornerArc {
            orient,
            weight: Q::one(),
        }
    }
}

/// Contents of one triangle.
///
/// Corner `c` sits between side `c-1` and side `c`. A clockwise arc leaves
/// the triangle through side `c` and comes in through side `c-1`. Arcs are
/// listed farthest from the vertex first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrianglePicture {
    pub honeycomb: Option<Honeycomb>,
    pub corners: [Vec<CornerArc>; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrandKind {
    /// Arc `idx` of the corner list of `corner`.
    Arc { corner: usize, idx: usize },
    Leg { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub kind: StrandKind,
    pub weight: Q,
    /// Leaves the triangle through this side.
    pub exits: bool,
    /// Whether the strand belongs to the corner at the start of the side.
    pub initial: bool,
}

impl Strand {
    pub fn is_arc(&self) -> bool {
        matches!(self.kind, StrandKind::Arc { .. })
    }

    /// `-1` near the initial point or into a sink, `+1` near the terminal
    /// point or out of a source.
    pub fn turn(&self) -> i32 {
        match self.kind {
            StrandKind::Arc { .. } => {
                if self.initial {
                    -1
                } else {
                    1
                }
            }
            StrandKind::Leg { .. } => {
                if self.exits {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// A strand end left open on an interior edge: it spirals into the puncture
/// at its corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PunctureSign {
    pub tri: usize,
    pub side: usize,
    pub strand: usize,
    pub sign: i8,
}

/// A lamination in good position with respect to a triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GlobalPicture {
    pub triangles: Vec<TrianglePicture>,
    /// Per edge: `(iL, iR)` pairs of strand positions on the `T_L` and
    /// `T_R` sides, sorted by `iL`. Empty on boundary intervals.
    pub pairings: Vec<Vec<(usize, usize)>>,
    pub puncture_signs: Vec<PunctureSign>,
}

impl GlobalPicture {
    pub fn empty(t: &Triangulation) -> Self {
        GlobalPicture {
            triangles: vec![TrianglePicture::default(); t.num_triangles()],
            pairings: vec![Vec::new(); t.num_edges()],
            puncture_signs: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.triangles
            .iter()
            .all(|tp| tp.honeycomb.is_none() && tp.corners.iter().all(|c| c.is_empty()))
    }

    /// Strands on side `side` of triangle `tri`, read counterclockwise.
    pub fn side_strands(&self, tri: usize, side: usize) -> Vec<Strand> {
        let tp = &self.triangles[tri];
        let c0 = side;
        let c1 = (side + 1) % 3;
        let mut out = Vec::new();
        for (idx, arc) in tp.corners[c0].iter().enumerate().rev() {
            out.push(Strand {
                kind: StrandKind::Arc { corner: c0, idx },
                weight: arc.weight.clone(),
                exits: arc.orient == Orient::Cw,
                initial: true,
            });
        }
        if let Some(h) = &tp.honeycomb {
            for k in 0..h.height as usize {
                out.push(Strand {
                    kind: StrandKind::Leg { k },
                    weight: h.weight.clone(),
                    exits: h.orient == HoneycombOrient::Source,
                    initial: false,
                });
            }
        }
        for (idx, arc) in tp.corners[c1].iter().enumerate() {
            out.push(Strand {
                kind: StrandKind::Arc { corner: c1, idx },
                weight: arc.weight.clone(),
                exits: arc.orient == Orient::Ccw,
                initial: false,
            });
        }
        out
    }

    /// Position of an arc on one of its two sides.
    pub fn arc_position(&self, tri: usize, corner: usize, idx: usize, side: usize) -> usize {
        let tp = &self.triangles[tri];
        if side == corner {
            tp.corners[corner].len() - 1 - idx
        } else {
            debug_assert_eq!((side + 1) % 3, corner);
            tp.corners[side].len() + tp.honeycomb.as_ref().map_or(0, |h| h.height as usize) + idx
        }
    }

    pub fn sign_at(&self, tri: usize, side: usize, strand: usize) -> Option<i8> {
        self.puncture_signs
            .iter()
            .find(|p| p.tri == tri && p.side == side && p.strand == strand)
            .map(|p| p.sign)
    }

    /// Partner of a strand across its edge, as `(tri, side, strand)`.
    pub fn partner(&self, t: &Triangulation, tri: usize, side: usize, strand: usize) -> Option<(usize, usize, usize)> {
        let e = t.triangles[tri].sides[side].edge;
        let (tl, il) = t.left_slot(e);
        let (tr, ir) = t.right_slot(e)?;
        if (tri, side) == (tl, il) {
            self.pairings[e]
                .iter()
                .find(|p| p.0 == strand)
                .map(|p| (tr, ir, p.1))
        } else {
            self.pairings[e]
                .iter()
                .find(|p| p.1 == strand)
                .map(|p| (tl, il, p.0))
        }
    }

    /// Every weight in the picture.
    pub fn weights(&self) -> impl Iterator<Item = &Q> {
        self.triangles.iter().flat_map(|tp| {
            tp.honeycomb
                .iter()
                .map(|h| &h.weight)
                .chain(tp.corners.iter().flatten().map(|a| &a.weight))
        })
    }

    pub fn is_integral(&self) -> bool {
        self.weights().all(|w| w.is_integer())
    }

    /// Multiply every weight by `u > 0`.
    pub fn scaled(&self, u: &Q) -> Self {
        let mut p = self.clone();
        for tp in &mut p.triangles {
            if let Some(h) = &mut tp.honeycomb {
                h.weight = &h.weight * u;
            }
            for arc in tp.corners.iter_mut().flatten() {
                arc.weight = &arc.weight * u;
            }
        }
        p
    }

    /// Reverse every component. Pairings and puncture signs are kept.
    pub fn dynkin(&self) -> Self {
        let mut p = self.clone();
        for tp in &mut p.triangles {
            if let Some(h) = &mut tp.honeycomb {
                h.orient = h.orient.reversed();
            }
            for arc in tp.corners.iter_mut().flatten() {
                arc.orient = arc.orient.reversed();
            }
        }
        p
    }

    /// Replace every strand of integral weight `k` by `k` parallel strands of
    /// weight one. A honeycomb of height `h` and weight `k` becomes one of
    /// height `hk`.
    pub fn cabled(&self, t: &Triangulation) -> Result<Self, LaminationError> {
        if !self.is_integral() {
            return Err(LaminationError::NonIntegral("cabling needs integral weights".into()));
        }
        let mult = |w: &Q| -> usize { w.to_integer().try_into().expect("weight fits in usize") };
        let mut out = GlobalPicture::empty(t);
        for (ti, tp) in self.triangles.iter().enumerate() {
            let o = &mut out.triangles[ti];
            o.honeycomb = tp.honeycomb.as_ref().map(|h| Honeycomb {
                orient: h.orient,
                height: h.height * mult(&h.weight) as u32,
                weight: Q::one(),
            });
            for c in 0..3 {
                for arc in &tp.corners[c] {
                    for _ in 0..mult(&arc.weight) {
                        o.corners[c].push(CornerArc::unit(arc.orient));
                    }
                }
            }
        }
        // new start index of every old strand on every side
        let offsets = |tri: usize, side: usize| -> Vec<usize> {
            let mut acc = 0;
            self.side_strands(tri, side)
                .iter()
                .map(|s| {
                    let here = acc;
                    acc += mult(&s.weight);
                    here
                })
                .collect()
        };
        for e in 0..t.num_edges() {
            let Some((tr, ir)) = t.right_slot(e) else { continue };
            let (tl, il) = t.left_slot(e);
            let (ol, or) = (offsets(tl, il), offsets(tr, ir));
            let sl = self.side_strands(tl, il);
            for &(a, b) in &self.pairings[e] {
                let k = mult(&sl[a].weight);
                for j in 0..k {
                    out.pairings[e].push((ol[a] + j, or[b] + k - 1 - j));
                }
            }
            out.pairings[e].sort_unstable();
        }
        for ps in &self.puncture_signs {
            let off = offsets(ps.tri, ps.side);
            let s = &self.side_strands(ps.tri, ps.side)[ps.strand];
            for j in 0..mult(&s.weight) {
                out.puncture_signs.push(PunctureSign {
                    strand: off[ps.strand] + j,
                    ..*ps
                });
            }
        }
        out.puncture_signs.sort_unstable();
        Ok(out)
    }

    /// `(u, L')` with `u` the least common denominator of the weights and
    /// `L'` the unit-weight cabling of `u L`.
    pub fn normalize_integral(&self, t: &Triangulation) -> Result<(BigInt, Self), LaminationError> {
        let u = denom_lcm(self.weights());
        let scaled = self.scaled(&Q::from_integer(u.clone()));
        Ok((u, scaled.cabled(t)?))
    }

    /// Order-preserving pairing of each direction family on every interior
    /// edge. Fails when family sizes or weights disagree; pictures with
    /// puncture ends are not handled.
    pub fn pair_canonically(&mut self, t: &Triangulation) -> Result<(), LaminationError> {
        self.puncture_signs.clear();
        for e in 0..t.num_edges() {
            self.pairings[e].clear();
            let Some((tr, ir)) = t.right_slot(e) else { continue };
            let (tl, il) = t.left_slot(e);
            let sl = self.side_strands(tl, il);
            let sr = self.side_strands(tr, ir);
            for exits in [true, false] {
                let fl: Vec<usize> = (0..sl.len()).filter(|&i| sl[i].exits == exits).collect();
                let fr: Vec<usize> = (0..sr.len()).rev().filter(|&i| sr[i].exits != exits).collect();
                if fl.len() != fr.len() {
                    return Err(LaminationError::InvalidPicture(format!(
                        "edge {}: {} strands leave one side, {} arrive on the other",
                        t.edges[e].id,
                        fl.len(),
                        fr.len()
                    )));
                }
                for (&a, &b) in fl.iter().zip(&fr) {
                    if sl[a].weight != sr[b].weight {
                        return Err(LaminationError::InvalidPicture(format!(
                            "edge {}: paired strands {a} and {b} differ in weight",
                            t.edges[e].id
                        )));
                    }
                    self.pairings[e].push((a, b));
                }
            }
            self.pairings[e].sort_unstable();
        }
        Ok(())
    }

    /// Check the structural invariants against `t`.
    pub fn validate(&self, t: &Triangulation) -> Result<(), LaminationError> {
        let bad = |msg: String| Err(LaminationError::InvalidPicture(msg));
        if self.triangles.len() != t.num_triangles() {
            return bad(format!("{} triangles for {}", self.triangles.len(), t.num_triangles()));
        }
        if self.pairings.len() != t.num_edges() {
            return bad(format!("pairings for {} edges, expected {}", self.pairings.len(), t.num_edges()));
        }
        for (ti, tp) in self.triangles.iter().enumerate() {
            let tid = &t.triangles[ti].id;
            if let Some(h) = &tp.honeycomb {
                if h.height == 0 {
                    return bad(format!("{tid}: honeycomb of height 0"));
                }
                if !h.weight.is_positive() {
                    return bad(format!("{tid}: honeycomb weight must be positive"));
                }
            }
            for (c, arcs) in tp.corners.iter().enumerate() {
                if let Some(i) = arcs.iter().position(|a| !a.weight.is_positive()) {
                    return bad(format!("{tid} corner {c} arc {i}: weight must be positive"));
                }
            }
        }
        let mut seen_signs = std::collections::BTreeSet::new();
        for ps in &self.puncture_signs {
            if ps.tri >= t.num_triangles() || ps.side > 2 {
                return bad("puncture sign outside the triangulation".into());
            }
            if !seen_signs.insert((ps.tri, ps.side, ps.strand)) {
                return bad(format!("{}: strand {} signed twice", t.triangles[ps.tri].id, ps.strand));
            }
            if ps.sign != 1 && ps.sign != -1 {
                return bad("puncture sign must be + or -".into());
            }
        }
        for e in 0..t.num_edges() {
            let eid = &t.edges[e].id;
            let (tl, il) = t.left_slot(e);
            let Some((tr, ir)) = t.right_slot(e) else {
                if !self.pairings[e].is_empty() {
                    return bad(format!("boundary interval {eid} carries pairings"));
                }
                if self.puncture_signs.iter().any(|p| (p.tri, p.side) == (tl, il)) {
                    return bad(format!("puncture end on boundary interval {eid}"));
                }
                continue;
            };
            let sl = self.side_strands(tl, il);
            let sr = self.side_strands(tr, ir);
            let mut used_l = vec![false; sl.len()];
            let mut used_r = vec![false; sr.len()];
            for &(a, b) in &self.pairings[e] {
                if a >= sl.len() || b >= sr.len() {
                    return bad(format!("{eid}: pair ({a}, {b}) out of range"));
                }
                if used_l[a] || used_r[b] {
                    return bad(format!("{eid}: strand used twice in ({a}, {b})"));
                }
                used_l[a] = true;
                used_r[b] = true;
                if sl[a].exits == sr[b].exits {
                    return bad(format!("{eid}: pair ({a}, {b}) does not reverse direction"));
                }
                if sl[a].weight != sr[b].weight {
                    return bad(format!("{eid}: pair ({a}, {b}) joins different weights"));
                }
            }
            for exits in [true, false] {
                let mut fam: Vec<(usize, usize)> = self.pairings[e]
                    .iter()
                    .copied()
                    .filter(|&(a, _)| sl[a].exits == exits)
                    .collect();
                fam.sort_unstable();
                if fam.windows(2).any(|w| w[0].1 <= w[1].1) {
                    return bad(format!("{eid}: pairing is not order-preserving"));
                }
            }
            for (slot, strands, used) in [((tl, il), &sl, &used_l), ((tr, ir), &sr, &used_r)] {
                for (i, s) in strands.iter().enumerate() {
                    let signed = self.sign_at(slot.0, slot.1, i).is_some();
                    if used[i] && signed {
                        return bad(format!("{eid}: paired strand {i} carries a puncture sign"));
                    }
                    if used[i] {
                        continue;
                    }
                    let StrandKind::Arc { corner, .. } = s.kind else {
                        return bad(format!("{eid}: honeycomb leg {i} is unpaired"));
                    };
                    let v = t.corner_vertex(slot.0, corner);
                    if t.vertices[v].class != VertexClass::Puncture {
                        return bad(format!("{eid}: unpaired strand {i} is not at a puncture"));
                    }
                    if !signed {
                        return bad(format!("{eid}: unpaired strand {i} has no puncture sign"));
                    }
                }
            }
        }
        for ps in &self.puncture_signs {
            if ps.strand >= self.side_strands(ps.tri, ps.side).len() {
                return bad(format!("{}: puncture sign on missing strand {}", t.triangles[ps.tri].id, ps.strand));
            }
        }
        Ok(())
    }

    /// Per side, the partners of the honeycomb legs: `[n1, n2, n3]` counts
    /// legs whose partner sits at the side's terminal corner, is a leg, or
    /// sits at the initial corner.
    pub fn leg_routing(&self, t: &Triangulation, tri: usize) -> [Option<[usize; 3]>; 3] {
        let mut out = [None; 3];
        if self.triangles[tri].honeycomb.is_none() {
            return out;
        }
        for (side, slot) in out.iter_mut().enumerate() {
            let e = t.triangles[tri].sides[side].edge;
            if !t.is_interior(e) {
                continue;
            }
            let mut n = [0usize; 3];
            for (i, s) in self.side_strands(tri, side).iter().enumerate() {
                if !matches!(s.kind, StrandKind::Leg { .. }) {
                    continue;
                }
                let Some((pt, ps, pi)) = self.partner(t, tri, side, i) else { continue };
                let p = &self.side_strands(pt, ps)[pi];
                match p.kind {
                    StrandKind::Leg { .. } => n[1] += 1,
                    // the far triangle reads the edge backwards
                    StrandKind::Arc { .. } if p.initial => n[0] += 1,
                    StrandKind::Arc { .. } => n[2] += 1,
                }
            }
            *slot = Some(n);
        }
        out
    }

    /// Total weight of clockwise and counterclockwise arcs at a corner.
    pub fn corner_totals(&self, tri: usize, corner: usize) -> (Q, Q) {
        let mut cw = Q::zero();
        let mut ccw = Q::zero();
        for a in &self.triangles[tri].corners[corner] {
            match a.orient {
                Orient::Cw => cw += &a.weight,
                Orient::Ccw => ccw += &a.weight,
            }
        }
        (cw, ccw)
    }
}
