use std::collections::HashSet;

use num_traits::Zero;
use sl3_lamination::{GlobalPicture, LaminationError, StrandKind};
use sl3_rational::{half, Q};
use sl3_surface::Triangulation;

/// Where a traveler stops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TravelerEnd {
    Leg { tri: usize },
    Boundary { edge: usize },
    Puncture { tri: usize, side: usize, strand: usize, sign: i8 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TravelerKind {
    /// Both ends on honeycombs or boundary intervals.
    Bounded,
    Closed,
    /// At least one end spirals into a puncture.
    Spiralling,
}

/// One crossing of an interior edge: strand positions on the `T_L` and
/// `T_R` sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub edge: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Traveler {
    pub kind: TravelerKind,
    /// Corner arcs `(tri, corner, idx)` in route order.
    pub arcs: Vec<(usize, usize, usize)>,
    pub crossings: Vec<Crossing>,
    pub ends: Vec<TravelerEnd>,
}

fn crossing(t: &Triangulation, tri: usize, side: usize, a: usize, b: usize) -> Crossing {
    let edge = t.triangles[tri].sides[side].edge;
    if t.left_slot(edge) == (tri, side) {
        Crossing { edge, left: a, right: b }
    } else {
        Crossing { edge, left: b, right: a }
    }
}

/// Follow every strand of a valid picture through the corner arcs.
pub fn traveler_trace(t: &Triangulation, p: &GlobalPicture) -> Result<Vec<Traveler>, LaminationError> {
    p.validate(t)?;
    let mut out = Vec::new();
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();
    // walk from strand `a` on (tri, side) away from the arc or leg it belongs to
    let walk = |tri: usize, side: usize, a: usize, route: &mut Vec<(usize, usize, usize)>, cr: &mut Vec<Crossing>, start: Option<(usize, usize, usize)>| -> Option<TravelerEnd> {
        let (mut tri, mut side, mut a) = (tri, side, a);
        loop {
            let e = t.triangles[tri].sides[side].edge;
            if !t.is_interior(e) {
                return Some(TravelerEnd::Boundary { edge: e });
            }
            let Some((t2, s2, b)) = p.partner(t, tri, side, a) else {
                let sign = p.sign_at(tri, side, a).unwrap_or(0);
                return Some(TravelerEnd::Puncture { tri, side, strand: a, sign });
            };
            cr.push(crossing(t, tri, side, a, b));
            match p.side_strands(t2, s2)[b].kind {
                StrandKind::Leg { .. } => return Some(TravelerEnd::Leg { tri: t2 }),
                StrandKind::Arc { corner, idx } => {
                    if Some((t2, corner, idx)) == start {
                        return None;
                    }
                    route.push((t2, corner, idx));
                    let next = if s2 == corner { (corner + 2) % 3 } else { corner };
                    a = p.arc_position(t2, corner, idx, next);
                    tri = t2;
                    side = next;
                }
            }
        }
    };
    for tri in 0..t.num_triangles() {
        for corner in 0..3 {
            for idx in 0..p.triangles[tri].corners[corner].len() {
                if seen.contains(&(tri, corner, idx)) {
                    continue;
                }
                let start = (tri, corner, idx);
                let mut fwd = Vec::new();
                let mut cf = Vec::new();
                let e1 = walk(tri, corner, p.arc_position(tri, corner, idx, corner), &mut fwd, &mut cf, Some(start));
                let (arcs, crossings, ends) = match e1 {
                    None => {
                        let mut arcs = vec![start];
                        arcs.extend(fwd);
                        (arcs, cf, vec![])
                    }
                    Some(end1) => {
                        let back_side = (corner + 2) % 3;
                        let mut bwd = Vec::new();
                        let mut cb = Vec::new();
                        let end0 = walk(tri, back_side, p.arc_position(tri, corner, idx, back_side), &mut bwd, &mut cb, None)
                            .expect("an open traveler cannot close");
                        bwd.reverse();
                        cb.reverse();
                        let mut arcs = bwd;
                        arcs.push(start);
                        arcs.extend(fwd);
                        cb.extend(cf);
                        (arcs, cb, vec![end0, end1])
                    }
                };
                seen.extend(arcs.iter().copied());
                let kind = if ends.is_empty() {
                    TravelerKind::Closed
                } else if ends.iter().any(|e| matches!(e, TravelerEnd::Puncture { .. })) {
                    TravelerKind::Spiralling
                } else {
                    TravelerKind::Bounded
                };
                out.push(Traveler {
                    kind,
                    arcs,
                    crossings,
                    ends,
                });
            }
        }
    }
    // leg-to-leg crossings
    for e in 0..t.num_edges() {
        let Some((tr, ir)) = t.right_slot(e) else { continue };
        let (tl, il) = t.left_slot(e);
        let sl = p.side_strands(tl, il);
        let sr = p.side_strands(tr, ir);
        for &(a, b) in &p.pairings[e] {
            if !sl[a].is_arc() && !sr[b].is_arc() {
                out.push(Traveler {
                    kind: TravelerKind::Bounded,
                    arcs: vec![],
                    crossings: vec![Crossing { edge: e, left: a, right: b }],
                    ends: vec![TravelerEnd::Leg { tri: tl }, TravelerEnd::Leg { tri: tr }],
                });
            }
        }
    }
    Ok(out)
}

/// Identifiers of the strands on one side: per direction family, arcs at
/// the initial corner count negatively outwards from the origin and the rest
/// positively, each strand sitting at the middle of its weight.
pub fn identifiers(p: &GlobalPicture, tri: usize, side: usize) -> Vec<Q> {
    let strands = p.side_strands(tri, side);
    let mut out = vec![Q::zero(); strands.len()];
    for exits in [true, false] {
        let idx: Vec<usize> = (0..strands.len()).filter(|&i| strands[i].exits == exits).collect();
        let split = idx.iter().position(|&i| !(strands[i].is_arc() && strands[i].initial)).unwrap_or(idx.len());
        let mut acc = Q::zero();
        for &i in idx[..split].iter().rev() {
            out[i] = -(&acc + &strands[i].weight * half());
            acc += &strands[i].weight;
        }
        let mut acc = Q::zero();
        for &i in &idx[split..] {
            out[i] = &acc + &strands[i].weight * half();
            acc += &strands[i].weight;
        }
    }
    out
}

/// Check `k_L + k_R = c` on every crossing of every edge with pins
/// `[c⁺, c⁻]` (for strands leaving and entering `T_L`). Returns the number of
/// crossings checked.
pub fn check_identifiers(t: &Triangulation, p: &GlobalPicture, pins: &[Option<[Q; 2]>]) -> Result<usize, String> {
    let mut n = 0;
    for e in 0..t.num_edges() {
        let Some(c) = &pins[e] else { continue };
        let (tl, il) = t.left_slot(e);
        let (tr, ir) = t.right_slot(e).ok_or_else(|| format!("{} is a boundary interval", t.edges[e].id))?;
        let kl = identifiers(p, tl, il);
        let kr = identifiers(p, tr, ir);
        let sl = p.side_strands(tl, il);
        for &(a, b) in &p.pairings[e] {
            let want = if sl[a].exits { &c[0] } else { &c[1] };
            let got = &kl[a] + &kr[b];
            if &got != want {
                return Err(format!(
                    "edge {}: strands ({a}, {b}) have identifiers summing to {got}, expected {want}",
                    t.edges[e].id
                ));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Swap adjacent corner arcs of opposite orientation whose strands cross in
/// the biangles on both of their sides, until none are left.
pub fn remove_squares(t: &Triangulation, p: &GlobalPicture) -> Result<GlobalPicture, LaminationError> {
    p.validate(t)?;
    let mut p = p.clone();
    loop {
        let mut changed = false;
        for tri in 0..t.num_triangles() {
            for c in 0..3 {
                for i in 0..p.triangles[tri].corners[c].len().saturating_sub(1) {
                    let arcs = &p.triangles[tri].corners[c];
                    if arcs[i].orient == arcs[i + 1].orient {
                        continue;
                    }
                    if crosses(t, &p, tri, c, i) {
                        swap_arcs(t, &mut p, tri, c, i);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Ok(p);
        }
    }
}

fn crosses(t: &Triangulation, p: &GlobalPicture, tri: usize, c: usize, i: usize) -> bool {
    for side in [c, (c + 2) % 3] {
        if !t.is_interior(t.triangles[tri].sides[side].edge) {
            return false;
        }
        let a = p.arc_position(tri, c, i, side);
        let b = p.arc_position(tri, c, i + 1, side);
        let (lo, hi) = (a.min(b), a.max(b));
        let (Some(pl), Some(ph)) = (p.partner(t, tri, side, lo), p.partner(t, tri, side, hi)) else {
            return false;
        };
        // the far side reads the edge backwards
        if pl.2 > ph.2 {
            return false;
        }
    }
    true
}

fn swap_arcs(t: &Triangulation, p: &mut GlobalPicture, tri: usize, c: usize, i: usize) {
    for side in [c, (c + 2) % 3] {
        let a = p.arc_position(tri, c, i, side);
        let b = p.arc_position(tri, c, i + 1, side);
        let e = t.triangles[tri].sides[side].edge;
        let is_l = t.left_slot(e) == (tri, side);
        for pair in &mut p.pairings[e] {
            let x = if is_l { &mut pair.0 } else { &mut pair.1 };
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
        p.pairings[e].sort_unstable();
        for ps in &mut p.puncture_signs {
            if (ps.tri, ps.side) == (tri, side) {
                if ps.strand == a {
                    ps.strand = b;
                } else if ps.strand == b {
                    ps.strand = a;
                }
            }
        }
    }
    p.triangles[tri].corners[c].swap(i, i + 1);
    p.puncture_signs.sort_unstable();
}
