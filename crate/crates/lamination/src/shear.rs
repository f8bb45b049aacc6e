use num_traits::Zero;
use sl3_rational::{frac, pos, Q};
use sl3_seed::IndexSet;
use sl3_surface::Triangulation;
use sl3_tropical::{Kind, TropicalPoint};

use crate::picture::{GlobalPicture, HoneycombOrient, Orient};
use crate::{LaminationError, PinnedLamination};

/// `±height·weight` per face, sink positive.
pub fn face_coordinate(p: &GlobalPicture, tri: usize) -> Q {
    match &p.triangles[tri].honeycomb {
        None => Q::zero(),
        Some(h) => {
            let v = Q::from_integer(h.height.into()) * &h.weight;
            match h.orient {
                HoneycombOrient::Sink => v,
                HoneycombOrient::Source => -v,
            }
        }
    }
}

/// Unfrozen shear coordinates.
///
/// A paired crossing of weight `w` adds `w (t_L - t_R) / 2` to `x_{E,1}`
/// when it leaves `T_L`, to `x_{E,2}` otherwise, where `t` is `-1` for the
/// lower corner of the quadrilateral or a sink leg and `+1` for the upper
/// corner or a source leg. Puncture ends contribute nothing.
pub fn shear_unfrozen(t: &Triangulation, p: &GlobalPicture) -> Result<TropicalPoint, LaminationError> {
    p.validate(t)?;
    Ok(shear_unchecked(t, p))
}

pub(crate) fn shear_unchecked(t: &Triangulation, p: &GlobalPicture) -> TropicalPoint {
    let ix = IndexSet::new(t);
    let mut x = TropicalPoint::zero(Kind::X, &ix).restrict();
    for f in 0..t.num_triangles() {
        x.coords[ix.face_pos(f)] = face_coordinate(p, f);
    }
    for e in 0..t.num_edges() {
        let Some((tr, ir)) = t.right_slot(e) else { continue };
        let (tl, il) = t.left_slot(e);
        let sl = p.side_strands(tl, il);
        let sr = p.side_strands(tr, ir);
        for &(a, b) in &p.pairings[e] {
            // on the far side the lower corner is the terminal one
            let d = sl[a].turn() + sr[b].turn();
            if d == 0 {
                continue;
            }
            let v = &sl[a].weight * frac(d as i64, 2);
            let s = if sl[a].exits { 1 } else { 2 };
            x.coords[ix.edge_pos(e, s)] += v;
        }
    }
    x
}

/// `(α⁺, α⁻)`: clockwise and counterclockwise weight at the initial corner
/// of a boundary interval.
pub fn boundary_alpha(t: &Triangulation, p: &GlobalPicture, e: usize) -> (Q, Q) {
    let (tri, side) = t.left_slot(e);
    p.corner_totals(tri, side)
}

/// Full shear coordinates of a pinned lamination:
/// `x_{E,1} = δ⁺ - α⁺` and `x_{E,2} = δ⁻ - α⁻ - [x_T]_+` on boundary
/// intervals.
pub fn shear_frozen(t: &Triangulation, l: &PinnedLamination) -> Result<TropicalPoint, LaminationError> {
    let mut x = shear_unfrozen(t, &l.picture)?;
    x.restricted = false;
    frozen_part(t, l, &mut x);
    Ok(x)
}

pub(crate) fn frozen_part(t: &Triangulation, l: &PinnedLamination, x: &mut TropicalPoint) {
    let ix = IndexSet::new(t);
    for e in 0..t.num_edges() {
        if t.is_interior(e) {
            continue;
        }
        let (tri, _) = t.left_slot(e);
        let (ap, am) = boundary_alpha(t, &l.picture, e);
        let xt = face_coordinate(&l.picture, tri);
        let [dp, dm] = &l.delta[e];
        x.coords[ix.edge_pos(e, 1)] = dp - ap;
        x.coords[ix.edge_pos(e, 2)] = dm - am - pos(&xt);
    }
}

/// A-coordinates of a bounded picture (no puncture ends).
///
/// A strand of weight `w` on an edge gives `(1/3, 2/3) w` to `(E:1, E:2)`
/// when it enters the triangle on the left of the edge and `(2/3, 1/3) w`
/// when it leaves; a face gets `height·w` plus `2w/3` per counterclockwise
/// and `w/3` per clockwise arc.
pub fn a_coords(t: &Triangulation, p: &GlobalPicture) -> Result<TropicalPoint, LaminationError> {
    p.validate(t)?;
    if !p.puncture_signs.is_empty() {
        return Err(LaminationError::NotBounded("the picture has puncture ends".into()));
    }
    let ix = IndexSet::new(t);
    let mut a = TropicalPoint::zero(Kind::A, &ix);
    let (third, two_thirds) = (frac(1, 3), frac(2, 3));
    for (f, tp) in p.triangles.iter().enumerate() {
        let mut v = Q::zero();
        if let Some(h) = &tp.honeycomb {
            v += Q::from_integer(h.height.into()) * &h.weight;
        }
        for arc in tp.corners.iter().flatten() {
            v += &arc.weight
                * match arc.orient {
                    Orient::Ccw => &two_thirds,
                    Orient::Cw => &third,
                };
        }
        a.coords[ix.face_pos(f)] = v;
    }
    for e in 0..t.num_edges() {
        let (tl, il) = t.left_slot(e);
        for s in p.side_strands(tl, il) {
            let (w1, w2) = if s.exits { (&two_thirds, &third) } else { (&third, &two_thirds) };
            a.coords[ix.edge_pos(e, 1)] += &s.weight * w1;
            a.coords[ix.edge_pos(e, 2)] += &s.weight * w2;
        }
    }
    Ok(a)
}
