use std::collections::BTreeMap;

use num_traits::Zero;
use sl3_rational::{pos, pos3, Q};
use sl3_seed::{extended_matrix, FlipLabels, IndexSet};
use sl3_surface::Triangulation;

use crate::{Kind, TropicalError, TropicalPoint};

/// The flip on the twelve local coordinates, labels `1..12` at `x[0..12]`.
///
/// Outputs are indexed by the same labels carried to the flipped seed.
pub fn flip_x_local(x: &[Q; 12]) -> [Q; 12] {
    let [x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12] = x;
    let p1 = pos(x1);
    let p3 = pos(x3);
    let p123 = pos3(x1, x2, x3);
    let p341 = pos3(x3, x4, x1);
    [
        x2 + &p341 - &p123,
        -x1 - x2 + &p1 - &p3,
        x4 + &p123 - &p341,
        -x3 - x4 + &p3 - &p1,
        x5 + &p1,
        x6 + &p123 - &p1,
        x7 + x1 + x2 + &p3 - &p123,
        x8 - pos(&-x3),
        x9 + &p3,
        x10 + &p341 - &p3,
        x11 + x3 + x4 + &p1 - &p341,
        x12 - pos(&-x1),
    ]
}

/// Closed-form flip of an X-point at `edge`, written on the seed of the
/// flipped triangulation.
///
/// Only quadrilaterals whose twelve labels are distinct indices are
/// accepted.
pub fn flip_x_closed_form(p: &TropicalPoint, t: &Triangulation, edge: &str) -> Result<TropicalPoint, TropicalError> {
    if p.kind != Kind::X {
        return Err(TropicalError::KindMismatch { expected: Kind::X });
    }
    let ix = IndexSet::new(t);
    p.check_seed_ids(&ix.ids)?;
    let e = t.edge_by_id(edge)?;
    let labels = FlipLabels::new(t, &ix, e)
        .ok_or_else(|| TropicalError::BadLabeling(format!("{edge} is not interior")))?;
    if !labels.embedded() {
        return Err(TropicalError::BadLabeling(format!(
            "the quadrilateral of {edge} has coinciding sides"
        )));
    }
    let x: [Q; 12] = labels.pos.map(|i| p.coords[i].clone());
    let y = flip_x_local(&x);
    let (tl, tr) = (t.left_slot(e).0, t.right_slot(e).expect("interior").0);
    let mut out = p.clone();
    // labels 1..4 land on the face of T'_L, E':1, the face of T'_R, E':2
    let dst = [ix.face_pos(tl), ix.edge_pos(e, 1), ix.face_pos(tr), ix.edge_pos(e, 2)];
    for (k, v) in y.into_iter().enumerate() {
        let i = if k < 4 { dst[k] } else { labels.pos[k] };
        if out.live(i) {
            out.coords[i] = v;
        }
    }
    Ok(out)
}

/// `x_i = Σ_j (ε_ij + m_ij) a_j`.
pub fn ensemble(a: &TropicalPoint, t: &Triangulation) -> Result<TropicalPoint, TropicalError> {
    if a.kind != Kind::A {
        return Err(TropicalError::KindMismatch { expected: Kind::A });
    }
    let m = extended_matrix(t);
    a.check_seed(&m)?;
    let mut x = a.clone();
    x.kind = Kind::X;
    x.restricted = false;
    for i in 0..a.len() {
        let mut s = Q::zero();
        for j in 0..a.len() {
            let e = m.get(i, j);
            if !e.is_zero() {
                s += e * &a.coords[j];
            }
        }
        x.coords[i] = s;
    }
    Ok(x)
}

/// The Dynkin involution in cluster coordinates.
///
/// Faces change sign; on each edge
/// `x_{E,1} -> x_{E,2} + [x_{T_L}]_+ - [-x_{T_R}]_+` and
/// `x_{E,2} -> x_{E,1} + [x_{T_R}]_+ - [-x_{T_L}]_+`, a missing `T_R` on a
/// boundary interval contributing nothing.
pub fn dynkin_cluster(p: &TropicalPoint, t: &Triangulation) -> Result<TropicalPoint, TropicalError> {
    if p.kind != Kind::X {
        return Err(TropicalError::KindMismatch { expected: Kind::X });
    }
    let ix = IndexSet::new(t);
    p.check_seed_ids(&ix.ids)?;
    let mut out = p.clone();
    for f in 0..t.num_triangles() {
        let i = ix.face_pos(f);
        out.coords[i] = -&p.coords[i];
    }
    for e in 0..t.num_edges() {
        let (i1, i2) = (ix.edge_pos(e, 1), ix.edge_pos(e, 2));
        if !p.live(i1) {
            continue;
        }
        let xl = &p.coords[ix.face_pos(t.left_slot(e).0)];
        let xr = t
            .right_slot(e)
            .map(|s| p.coords[ix.face_pos(s.0)].clone())
            .unwrap_or_else(Q::zero);
        out.coords[i1] = &p.coords[i2] + pos(xl) - pos(&-&xr);
        out.coords[i2] = &p.coords[i1] + pos(&xr) - pos(&-xl);
    }
    Ok(out)
}

/// `x_{E,1} = x_{E,2} = sl2(E)`, faces zero; edges not named read as zero.
pub fn principal_embed(sl2: &BTreeMap<String, Q>, t: &Triangulation) -> Result<TropicalPoint, TropicalError> {
    let ix = IndexSet::new(t);
    let mut p = TropicalPoint::zero(Kind::X, &ix);
    for (id, v) in sl2 {
        let e = t.edge_by_id(id)?;
        p.coords[ix.edge_pos(e, 1)] = v.clone();
        p.coords[ix.edge_pos(e, 2)] = v.clone();
    }
    Ok(p)
}
