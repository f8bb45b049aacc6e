//! The inverse of the shear coordinates: build a lamination in good
//! position from an X-coordinate vector.

pub mod engine;
mod travelers;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use sl3_lamination::{shear_unfrozen, GlobalPicture, Honeycomb, HoneycombOrient, LaminationError, PinnedLamination};
use sl3_rational::{denom_lcm, pos, Q};
use sl3_seed::IndexSet;
use sl3_surface::Triangulation;
use sl3_tropical::{Kind, TropicalError, TropicalPoint};

pub use engine::{EdgeRule, Setup};
pub use travelers::{
    check_identifiers, identifiers, remove_squares, traveler_trace, Crossing, Traveler, TravelerEnd, TravelerKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReconstructError {
    #[error("TruncationTooShallow: {0}")]
    TruncationTooShallow(String),
    #[error("NonIntegralInput: {0}")]
    NonIntegralInput(String),
    #[error(transparent)]
    Lamination(#[from] LaminationError),
    #[error(transparent)]
    Tropical(#[from] TropicalError),
}

fn to_int(x: &Q) -> Result<i64, ReconstructError> {
    if !x.is_integer() {
        return Err(ReconstructError::NonIntegralInput(format!("{x} is not an integer")));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| ReconstructError::NonIntegralInput(format!("{x} is too large")))
}

fn check_point(x: &TropicalPoint, t: &Triangulation) -> Result<IndexSet, ReconstructError> {
    if x.kind != Kind::X {
        return Err(TropicalError::KindMismatch { expected: Kind::X }.into());
    }
    let ix = IndexSet::new(t);
    x.check_seed_ids(&ix.ids)?;
    Ok(ix)
}

/// `[c⁺, c⁻]` per interior edge: `x_{E,1} + [x_{T_R}]₊` and
/// `[x_{T_L}]₊ + x_{E,2}`.
pub fn pins_from_x(x: &TropicalPoint, t: &Triangulation) -> Vec<Option<[Q; 2]>> {
    let ix = IndexSet::new(t);
    (0..t.num_edges())
        .map(|e| {
            let (tl, _) = t.left_slot(e);
            let (tr, _) = t.right_slot(e)?;
            let xl = &x.coords[ix.face_pos(tl)];
            let xr = &x.coords[ix.face_pos(tr)];
            Some([
                &x.coords[ix.edge_pos(e, 1)] + pos(xr),
                pos(xl) + &x.coords[ix.edge_pos(e, 2)],
            ])
        })
        .collect()
}

/// `max_Q (|x_{E,1}| + |x_{E,2}| + |x_{T_L}| + |x_{T_R}|) + 2` over the
/// quadrilaterals, for integral `x`.
pub fn default_depth(x: &TropicalPoint, t: &Triangulation) -> Q {
    let ix = IndexSet::new(t);
    let mut best = Q::zero();
    for e in 0..t.num_edges() {
        let Some(q) = t.quad(e) else { continue };
        let s = x.coords[ix.edge_pos(e, 1)].abs()
            + x.coords[ix.edge_pos(e, 2)].abs()
            + x.coords[ix.face_pos(q.tl)].abs()
            + x.coords[ix.face_pos(q.tr)].abs();
        if s > best {
            best = s;
        }
    }
    best + Q::from_integer(2.into())
}

/// Pins `(n_L⁺, n_R⁻, n_L⁻, n_R⁺) = (x_{E,1}, [x_{T_R}]₊, [x_{T_L}]₊, x_{E,2})`
/// per interior edge.
pub fn gluing_pins(x: &TropicalPoint, t: &Triangulation) -> Vec<Option<[Q; 4]>> {
    let ix = IndexSet::new(t);
    (0..t.num_edges())
        .map(|e| {
            let (tl, _) = t.left_slot(e);
            let (tr, _) = t.right_slot(e)?;
            Some([
                x.coords[ix.edge_pos(e, 1)].clone(),
                pos(&x.coords[ix.face_pos(tr)]),
                pos(&x.coords[ix.face_pos(tl)]),
                x.coords[ix.edge_pos(e, 2)].clone(),
            ])
        })
        .collect()
}

/// Reconstruction for integral `x`; frozen entries are ignored.
pub fn reconstruct_integral(x: &TropicalPoint, t: &Triangulation, depth: Option<i64>) -> Result<GlobalPicture, ReconstructError> {
    reconstruct_with_pins(x, t, &gluing_pins(x, t), depth)
}

/// Honeycombs from the face coordinates of `x`, strands paired by explicit
/// pins. Only the sums `n_L⁺ + n_R⁻` and `n_L⁻ + n_R⁺` matter.
pub fn reconstruct_with_pins(
    x: &TropicalPoint,
    t: &Triangulation,
    pins: &[Option<[Q; 4]>],
    depth: Option<i64>,
) -> Result<GlobalPicture, ReconstructError> {
    let ix = check_point(x, t)?;
    let mut base = GlobalPicture::empty(t);
    for tri in 0..t.num_triangles() {
        let xt = to_int(&x.coords[ix.face_pos(tri)])?;
        if xt != 0 {
            base.triangles[tri].honeycomb = Some(Honeycomb {
                orient: if xt > 0 { HoneycombOrient::Sink } else { HoneycombOrient::Source },
                height: xt.unsigned_abs() as u32,
                weight: Q::one(),
            });
        }
    }
    let mut rules = Vec::with_capacity(t.num_edges());
    for pin in pins {
        rules.push(match pin {
            None => EdgeRule::Boundary,
            Some([lp, rm, lm, rp]) => EdgeRule::Pinned([to_int(&(lp + rm))?, to_int(&(lm + rp))?]),
        });
    }
    let depth = match depth {
        Some(d) => d,
        None => to_int(&default_depth(x, t))?,
    };
    let setup = Setup {
        t,
        base,
        rules,
        stacks: vec![true; t.vertices.len()],
    };
    Ok(engine::run(&setup, Some(depth))?.picture)
}

/// `ξ(x)`: rational inputs are scaled by the common denominator `u`, rebuilt,
/// and given weights `1/u`. `depth` refers to the scaled vector.
pub fn reconstruct(x: &TropicalPoint, t: &Triangulation, depth: Option<i64>) -> Result<GlobalPicture, ReconstructError> {
    let ix = check_point(x, t)?;
    let u: BigInt = denom_lcm(ix.unfrozen().map(|i| &x.coords[i]));
    if u.is_one() {
        return reconstruct_integral(&x.restrict(), t, depth);
    }
    let uq = Q::from_integer(u);
    let pic = reconstruct_integral(&x.restrict().scale(&uq), t, depth)?;
    Ok(pic.scaled(&(Q::one() / uq)))
}

/// Reconstruction including pinnings: `δ⁺ = x_{E,1} + α⁺` and
/// `δ⁻ = x_{E,2} + α⁻ + [x_T]₊` on boundary intervals.
pub fn reconstruct_pinned(x: &TropicalPoint, t: &Triangulation, depth: Option<i64>) -> Result<PinnedLamination, ReconstructError> {
    let ix = check_point(x, t)?;
    if x.restricted {
        return Err(ReconstructError::Tropical(TropicalError::SeedMismatch(
            "pinned reconstruction needs frozen coordinates".into(),
        )));
    }
    let picture = reconstruct(x, t, depth)?;
    let mut l = PinnedLamination::new(picture, t);
    for e in 0..t.num_edges() {
        if t.is_interior(e) {
            continue;
        }
        let (tri, _) = t.left_slot(e);
        let (ap, am) = sl3_lamination::boundary_alpha(t, &l.picture, e);
        let xt = sl3_lamination::face_coordinate(&l.picture, tri);
        l.delta[e] = [
            &x.coords[ix.edge_pos(e, 1)] + ap,
            &x.coords[ix.edge_pos(e, 2)] + am + pos(&xt),
        ];
    }
    Ok(l)
}

/// The lamination whose shear coordinates are `-e_k`.
pub fn elementary_lamination(t: &Triangulation, k: usize) -> Result<PinnedLamination, ReconstructError> {
    let ix = IndexSet::new(t);
    let mut x = TropicalPoint::zero(Kind::X, &ix);
    x.coords[k] = -Q::one();
    reconstruct_pinned(&x, t, None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub depth: i64,
    /// `x(ξ(x)) = x` on the unfrozen part.
    pub equal: bool,
    /// `ξ(x)` is the same at depth `N` and `N + 2`.
    pub stable: bool,
    pub picture: GlobalPicture,
}

pub fn roundtrip_check(x: &TropicalPoint, t: &Triangulation, depth: Option<i64>) -> Result<RoundtripReport, ReconstructError> {
    let ix = check_point(x, t)?;
    let u: BigInt = denom_lcm(ix.unfrozen().map(|i| &x.coords[i]));
    let scaled = x.restrict().scale(&Q::from_integer(u));
    let depth = match depth {
        Some(d) => d,
        None => to_int(&default_depth(&scaled, t))?,
    };
    let picture = reconstruct(x, t, Some(depth))?;
    let again = reconstruct(x, t, Some(depth + 2))?;
    let y = shear_unfrozen(t, &picture)?;
    let equal = ix.unfrozen().all(|i| y.coords[i] == x.coords[i]);
    Ok(RoundtripReport {
        depth,
        equal,
        stable: again == picture,
        picture,
    })
}
