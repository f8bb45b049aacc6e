//! Gluing pinned laminations along a pair of boundary intervals, on
//! coordinates and on pictures, and the shift action of the Cartan torus.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use sl3_lamination::{boundary_alpha, LaminationError, PinnedLamination};
use sl3_rational::{denom_lcm, Q};
use sl3_reconstruct::{engine, EdgeRule, ReconstructError, Setup};
use sl3_seed::IndexSet;
use sl3_surface::{glue_boundary, GlueMaps, SurfaceError, Triangulation};
use sl3_tropical::{TropicalError, TropicalPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GlueError {
    #[error("SameEdge: {0}")]
    SameEdge(String),
    #[error("ResultViolatesSurfaceConditions: {0}")]
    ResultViolatesSurfaceConditions(String),
    #[error("UnknownInterval: {0}")]
    UnknownInterval(String),
    #[error("TruncationTooShallow: {0}")]
    TruncationTooShallow(String),
    #[error(transparent)]
    Surface(SurfaceError),
    #[error(transparent)]
    Lamination(#[from] LaminationError),
    #[error(transparent)]
    Tropical(#[from] TropicalError),
    #[error(transparent)]
    Reconstruct(ReconstructError),
}

impl From<SurfaceError> for GlueError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::SameEdge(s) => GlueError::SameEdge(s),
            SurfaceError::ResultViolatesSurfaceConditions(s) => GlueError::ResultViolatesSurfaceConditions(s),
            e => GlueError::Surface(e),
        }
    }
}

impl From<ReconstructError> for GlueError {
    fn from(e: ReconstructError) -> Self {
        match e {
            ReconstructError::TruncationTooShallow(s) => GlueError::TruncationTooShallow(s),
            e => GlueError::Reconstruct(e),
        }
    }
}

/// `x_{E,s} = x_{E_L,s} + x_{E_R,s*}`.
pub fn glue_coordinates(xl: &[Q; 2], xr: &[Q; 2]) -> [Q; 2] {
    [&xl[0] + &xr[1], &xl[1] + &xr[0]]
}

/// Coordinates on the glued surface: the new edge gets [`glue_coordinates`]
/// of the two intervals, everything else passes through by id.
pub fn glue_point(x: &TropicalPoint, t: &Triangulation, glued: &Triangulation, maps: &GlueMaps, er: &str) -> Result<TropicalPoint, GlueError> {
    if x.restricted {
        return Err(TropicalError::SeedMismatch("gluing needs frozen coordinates".into()).into());
    }
    x.check_seed_ids(&IndexSet::new(t).ids)?;
    let el = &maps.edge;
    let get = |id: String| x.get(&id).cloned().ok_or(GlueError::UnknownInterval(id));
    let xl = [get(format!("{el}:1"))?, get(format!("{el}:2"))?];
    let xr = [get(format!("{er}:1"))?, get(format!("{er}:2"))?];
    let g = glue_coordinates(&xl, &xr);
    let ix = IndexSet::new(glued);
    let mut out = TropicalPoint::zero(x.kind, &ix);
    for (i, id) in ix.ids.iter().enumerate() {
        out.coords[i] = if *id == format!("{el}:1") {
            g[0].clone()
        } else if *id == format!("{el}:2") {
            g[1].clone()
        } else {
            get(id.clone())?
        };
    }
    Ok(out)
}

/// `μ = a ϖ₁∨ + b ϖ₂∨`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShiftElement {
    pub a: Q,
    pub b: Q,
}

impl ShiftElement {
    pub fn new(a: Q, b: Q) -> Self {
        ShiftElement { a, b }
    }

    pub fn star(&self) -> Self {
        ShiftElement {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

fn boundary_interval(t: &Triangulation, id: &str) -> Result<usize, GlueError> {
    match t.edge_index(id) {
        Some(e) if !t.is_interior(e) => Ok(e),
        _ => Err(GlueError::UnknownInterval(id.to_string())),
    }
}

/// `(δ_{E_L} + μ, δ_{E_R} - μ*)`.
pub fn shift_action(l: &PinnedLamination, t: &Triangulation, el: &str, er: &str, mu: &ShiftElement) -> Result<PinnedLamination, GlueError> {
    let a = boundary_interval(t, el)?;
    let b = boundary_interval(t, er)?;
    let mut out = l.clone();
    out.delta[a][0] += &mu.a;
    out.delta[a][1] += &mu.b;
    let s = mu.star();
    out.delta[b][0] -= &s.a;
    out.delta[b][1] -= &s.b;
    Ok(out)
}

fn to_i64(x: &Q) -> Result<i64, GlueError> {
    x.to_integer()
        .to_i64()
        .ok_or_else(|| GlueError::Reconstruct(ReconstructError::NonIntegralInput(format!("{x} is too large"))))
}

/// Glue `eR` onto `eL`. Stack arcs are placed at the merged marked points
/// and paired across the new edge by the pins `δ_L⁺ + δ_R⁻` and
/// `δ_L⁻ + δ_R⁺`; the pinnings of the remaining intervals absorb the change
/// of their `α`.
pub fn glue_laminations(
    l: &PinnedLamination,
    t: &Triangulation,
    el: &str,
    er: &str,
    depth: Option<i64>,
) -> Result<(Triangulation, GlueMaps, PinnedLamination), GlueError> {
    let (glued, maps) = glue_boundary(t, el, er)?;
    let a = t.edge_by_id(el)?;
    let b = t.edge_by_id(er)?;
    l.picture.validate(t)?;

    let u: BigInt = denom_lcm(l.picture.weights().chain(l.delta[a].iter()).chain(l.delta[b].iter()));
    let uq = Q::from_integer(u);
    let mut base = l.picture.scaled(&uq).cabled(t)?;
    base.pairings.remove(b);

    let ne = glued.edge_by_id(el)?;
    let pin = |x: &Q, y: &Q| to_i64(&((x + y) * &uq));
    let mut rules = vec![EdgeRule::Boundary; glued.num_edges()];
    for (e, rule) in rules.iter_mut().enumerate() {
        if e == ne {
            *rule = EdgeRule::Pinned([
                pin(&l.delta[a][0], &l.delta[b][1])?,
                pin(&l.delta[a][1], &l.delta[b][0])?,
            ]);
        } else if glued.is_interior(e) {
            *rule = EdgeRule::Explicit;
        }
    }
    let mut stacks = vec![false; glued.vertices.len()];
    for e in [a, b] {
        for v in [t.edges[e].init, t.edges[e].term] {
            let id = &maps.vertices[&t.vertices[v].id];
            stacks[glued.vertex_index(id).expect("merged vertex")] = true;
        }
    }
    let setup = Setup {
        t: &glued,
        base,
        rules,
        stacks,
    };
    let picture = engine::run(&setup, depth)?.picture.scaled(&(Q::one() / uq));

    let mut out = PinnedLamination::new(picture, &glued);
    for (e, edge) in t.edges.iter().enumerate() {
        if e == a || e == b || t.is_interior(e) {
            continue;
        }
        let ng = glued.edge_by_id(&edge.id)?;
        let (p0, m0) = boundary_alpha(t, &l.picture, e);
        let (p1, m1) = boundary_alpha(&glued, &out.picture, ng);
        out.delta[ng] = [&l.delta[e][0] + p1 - p0, &l.delta[e][1] + m1 - m0];
    }
    Ok((glued, maps, out))
}
