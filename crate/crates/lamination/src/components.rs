use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sl3_rational::{denom_lcm, frac, q, Q};
use sl3_seed::IndexSet;
use sl3_surface::{Slot, Triangulation, VertexClass};
use sl3_tropical::{Kind, TropicalPoint};

use crate::picture::*;
use crate::{LaminationError, PinnedLamination};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "alpha_star")]
    AlphaStar,
    #[serde(rename = "tau_plus")]
    TauPlus,
    #[serde(rename = "tau_minus")]
    TauMinus,
    #[serde(rename = "alpha_plus")]
    AlphaPlus,
    #[serde(rename = "alpha_minus")]
    AlphaMinus,
    #[serde(rename = "alpha_plus_rev")]
    AlphaPlusRev,
    #[serde(rename = "alpha_minus_rev")]
    AlphaMinusRev,
    #[serde(rename = "tau_plus_L")]
    TauPlusL,
    #[serde(rename = "tau_plus_R")]
    TauPlusR,
    #[serde(rename = "tau_minus_L")]
    TauMinusL,
    #[serde(rename = "tau_minus_R")]
    TauMinusR,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "h_rev")]
    HRev,
    #[serde(rename = "peripheral_cw")]
    PeripheralCw,
    #[serde(rename = "peripheral_ccw")]
    PeripheralCcw,
    #[serde(rename = "e_plus")]
    EPlus,
    #[serde(rename = "e_minus")]
    EMinus,
}

use ComponentKind::*;

pub const ALL_KINDS: [ComponentKind; 18] = [
    Alpha,
    AlphaStar,
    TauPlus,
    TauMinus,
    AlphaPlus,
    AlphaMinus,
    AlphaPlusRev,
    AlphaMinusRev,
    TauPlusL,
    TauPlusR,
    TauMinusL,
    TauMinusR,
    H,
    HRev,
    PeripheralCw,
    PeripheralCcw,
    EPlus,
    EMinus,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    Triangle,
    Quadrilateral,
    Vertex,
    Interval,
}

impl ComponentKind {
    pub fn carrier(self) -> Carrier {
        match self {
            Alpha | AlphaStar | TauPlus | TauMinus => Carrier::Triangle,
            PeripheralCw | PeripheralCcw => Carrier::Vertex,
            EPlus | EMinus => Carrier::Interval,
            _ => Carrier::Quadrilateral,
        }
    }

    /// Orientation reversal.
    pub fn dual(self) -> Self {
        match self {
            Alpha => AlphaStar,
            AlphaStar => Alpha,
            TauPlus => TauMinus,
            TauMinus => TauPlus,
            AlphaPlus => AlphaPlusRev,
            AlphaPlusRev => AlphaPlus,
            AlphaMinus => AlphaMinusRev,
            AlphaMinusRev => AlphaMinus,
            TauPlusL => TauMinusL,
            TauMinusL => TauPlusL,
            TauPlusR => TauMinusR,
            TauMinusR => TauPlusR,
            H => HRev,
            HRev => H,
            PeripheralCw => PeripheralCcw,
            PeripheralCcw => PeripheralCw,
            EPlus => EMinus,
            EMinus => EPlus,
        }
    }

    pub fn name(self) -> String {
        serde_plain(self)
    }
}

fn serde_plain(k: ComponentKind) -> String {
    // the serde names double as display names
    let s = format!("{k:?}");
    match k {
        TauPlusL => "tau_plus_L".into(),
        TauPlusR => "tau_plus_R".into(),
        TauMinusL => "tau_minus_L".into(),
        TauMinusR => "tau_minus_R".into(),
        H => "h".into(),
        HRev => "h_rev".into(),
        _ => {
            let mut out = String::new();
            for (i, ch) in s.chars().enumerate() {
                if ch.is_uppercase() && i > 0 {
                    out.push('_');
                }
                out.push(ch.to_ascii_lowercase());
            }
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// Triangle id, interior edge id, vertex id or boundary interval id.
    pub carrier: String,
    #[serde(with = "sl3_rational::wire")]
    pub weight: Q,
    /// Corner of a triangle carrier, for `alpha` and `alpha_star`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<usize>,
}

impl Component {
    pub fn new(kind: ComponentKind, carrier: &str, weight: Q) -> Self {
        Component {
            kind,
            carrier: carrier.to_string(),
            weight,
            corner: None,
        }
    }

    pub fn at_corner(mut self, c: usize) -> Self {
        self.corner = Some(c);
        self
    }
}

/// A formal weighted sum of elementary components. `e_plus` and `e_minus`
/// entries are pinning contributions `δ⁺`, `δ⁻` on a boundary interval.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComponentSum {
    pub components: Vec<Component>,
}

// Tables on a single triangle: index 0 is the face, then `(a, b)` on
// sides 0, 1, 2 read from the carrier corner. A-values are in thirds.
const TRI_A: [(ComponentKind, [i64; 7]); 4] = [
    (Alpha, [2, 1, 2, 0, 0, 2, 1]),
    (AlphaStar, [1, 2, 1, 0, 0, 1, 2]),
    (TauPlus, [3, 1, 2, 1, 2, 1, 2]),
    (TauMinus, [3, 2, 1, 2, 1, 2, 1]),
];

const TRI_X: [(ComponentKind, [i64; 7]); 4] = [
    (Alpha, [0, 0, -1, 0, 0, 0, 0]),
    (AlphaStar, [0, -1, 0, 0, 0, 0, 0]),
    (TauPlus, [1, 0, -1, 0, -1, 0, -1]),
    (TauMinus, [-1, 0, 0, 0, 0, 0, 0]),
];

// Tables on a quadrilateral, in the order
// x121 x122 x231 x232 x341 x342 x411 x412 | x131 x132 FR FL.
// A-values are in thirds.
const QUAD_A: [(ComponentKind, [i64; 12]); 7] = [
    (AlphaPlus, [2, 1, 0, 0, 1, 2, 0, 0, 2, 1, 1, 2]),
    (AlphaMinus, [0, 0, 2, 1, 0, 0, 1, 2, 2, 1, 2, 1]),
    (TauPlusL, [0, 0, 1, 2, 1, 2, 1, 2, 1, 2, 1, 3]),
    (TauPlusR, [1, 2, 0, 0, 1, 2, 1, 2, 1, 2, 2, 3]),
    (TauMinusL, [0, 0, 2, 1, 2, 1, 2, 1, 2, 1, 2, 3]),
    (TauMinusR, [2, 1, 0, 0, 2, 1, 2, 1, 2, 1, 1, 3]),
    (H, [2, 1, 2, 1, 1, 2, 1, 2, 1, 2, 3, 3]),
];

const QUAD_X: [(ComponentKind, [i64; 12]); 7] = [
    (AlphaPlus, [-1, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0]),
    (AlphaMinus, [0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0]),
    (TauPlusL, [0, 0, 0, 0, 0, -1, 0, -1, 0, -1, 0, 1]),
    (TauPlusR, [0, -1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]),
    (TauMinusL, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]),
    (TauMinusR, [-1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1]),
    (H, [0, 0, 0, 0, 0, -1, 0, -1, 0, 0, -1, 1]),
];

/// The half-turn of the quadrilateral on the twelve labels.
const ROT180: [usize; 12] = [4, 5, 6, 7, 0, 1, 2, 3, 9, 8, 11, 10];

/// Table entries of a triangle component, read from its corner.
pub fn triangle_table(kind: ComponentKind, coords: Kind) -> Option<[Q; 7]> {
    let (table, den) = match coords {
        Kind::A => (&TRI_A, 3),
        Kind::X => (&TRI_X, 1),
    };
    table
        .iter()
        .find(|(k, _)| *k == kind)
        .map(|(_, v)| v.map(|n| frac(n, den)))
}

/// Table entries of a quadrilateral component in the label order
/// `x121 .. x412, x131, x132, FR, FL`.
pub fn quad_table(kind: ComponentKind, coords: Kind) -> Option<[Q; 12]> {
    let (table, den) = match coords {
        Kind::A => (&QUAD_A, 3),
        Kind::X => (&QUAD_X, 1),
    };
    let base = match kind {
        AlphaPlusRev => AlphaPlus,
        AlphaMinusRev => AlphaMinus,
        HRev => H,
        k => k,
    };
    let row = table.iter().find(|(k, _)| *k == base)?.1.map(|n| frac(n, den));
    if base == kind {
        Some(row)
    } else {
        let mut out: [Q; 12] = std::array::from_fn(|_| Q::zero());
        for (i, v) in row.into_iter().enumerate() {
            out[ROT180[i]] = v;
        }
        Some(out)
    }
}

/// Positions of the triangle labels `0..7` for a carrier corner.
pub fn triangle_labels(t: &Triangulation, ix: &IndexSet, tri: usize, corner: usize) -> [usize; 7] {
    let mut out = [ix.face_pos(tri); 7];
    for k in 0..3 {
        let side = t.triangles[tri].sides[(corner + k) % 3];
        let (a, b) = if side.reversed { (2, 1) } else { (1, 2) };
        out[1 + 2 * k] = ix.edge_pos(side.edge, a);
        out[2 + 2 * k] = ix.edge_pos(side.edge, b);
    }
    out
}

/// Positions of the quadrilateral labels around an interior edge.
pub fn quad_labels(t: &Triangulation, ix: &IndexSet, e: usize) -> Option<[usize; 12]> {
    let q = t.quad(e)?;
    let ab = |slot: Slot| {
        let s = t.side(slot);
        let (a, b) = if s.reversed { (2, 1) } else { (1, 2) };
        (ix.edge_pos(s.edge, a), ix.edge_pos(s.edge, b))
    };
    let (c1, c2) = ab(q.c);
    let (d1, d2) = ab(q.d);
    let (a1, a2) = ab(q.a);
    let (b1, b2) = ab(q.b);
    Some([
        c1,
        c2,
        d1,
        d2,
        a1,
        a2,
        b1,
        b2,
        ix.edge_pos(e, 1),
        ix.edge_pos(e, 2),
        ix.face_pos(q.tr),
        ix.face_pos(q.tl),
    ])
}

fn mismatch(msg: String) -> LaminationError {
    LaminationError::CarrierMismatch(msg)
}

fn require_boundary(t: &Triangulation, edge: usize, what: &Component) -> Result<(), LaminationError> {
    if t.is_interior(edge) {
        return Err(mismatch(format!(
            "{} on {} ends on interior edge {}",
            what.kind.name(),
            what.carrier,
            t.edges[edge].id
        )));
    }
    Ok(())
}

fn triangle_of(t: &Triangulation, c: &Component) -> Result<(usize, usize), LaminationError> {
    let tri = t
        .triangle_index(&c.carrier)
        .ok_or_else(|| mismatch(format!("{} needs a triangle, got {}", c.kind.name(), c.carrier)))?;
    let corner = c.corner.unwrap_or(0);
    if corner > 2 {
        return Err(mismatch(format!("corner {corner} of {}", c.carrier)));
    }
    Ok((tri, corner))
}

fn edge_of(t: &Triangulation, c: &Component) -> Result<usize, LaminationError> {
    let e = t
        .edge_index(&c.carrier)
        .ok_or_else(|| mismatch(format!("{} needs an edge, got {}", c.kind.name(), c.carrier)))?;
    if !t.is_interior(e) {
        return Err(mismatch(format!("{} needs an interior edge, got {}", c.kind.name(), c.carrier)));
    }
    Ok(e)
}

fn interval_of(t: &Triangulation, c: &Component) -> Result<usize, LaminationError> {
    let e = t
        .edge_index(&c.carrier)
        .ok_or_else(|| mismatch(format!("{} needs a boundary interval, got {}", c.kind.name(), c.carrier)))?;
    if t.is_interior(e) {
        return Err(mismatch(format!("{} is not a boundary interval", c.carrier)));
    }
    Ok(e)
}

fn vertex_of(t: &Triangulation, c: &Component) -> Result<usize, LaminationError> {
    t.vertex_index(&c.carrier)
        .ok_or_else(|| mismatch(format!("{} needs a marked point, got {}", c.kind.name(), c.carrier)))
}

/// The boundary interval starting at a special point.
pub fn interval_from(t: &Triangulation, v: usize) -> Option<usize> {
    (0..t.num_edges()).find(|&e| !t.is_interior(e) && t.edges[e].init == v)
}

impl ComponentSum {
    pub fn new(components: Vec<Component>) -> Self {
        ComponentSum { components }
    }

    pub fn check(&self, t: &Triangulation) -> Result<(), LaminationError> {
        for c in &self.components {
            match c.kind.carrier() {
                Carrier::Triangle => {
                    let (tri, corner) = triangle_of(t, c)?;
                    let sides: Vec<usize> = match c.kind {
                        Alpha | AlphaStar => vec![corner, (corner + 2) % 3],
                        _ => vec![0, 1, 2],
                    };
                    for s in sides {
                        require_boundary(t, t.triangles[tri].sides[s].edge, c)?;
                    }
                }
                Carrier::Quadrilateral => {
                    let e = edge_of(t, c)?;
                    let q = t.quad(e).expect("interior");
                    let row = quad_table(c.kind, Kind::A).expect("quad kind");
                    for (k, slot) in [q.c, q.d, q.a, q.b].into_iter().enumerate() {
                        if !row[2 * k].is_zero() || !row[2 * k + 1].is_zero() {
                            require_boundary(t, t.side(slot).edge, c)?;
                        }
                    }
                }
                Carrier::Vertex => {
                    vertex_of(t, c)?;
                }
                Carrier::Interval => {
                    interval_of(t, c)?;
                }
            }
            let free_sign = matches!(c.kind.carrier(), Carrier::Vertex | Carrier::Interval);
            if !free_sign && !c.weight.is_positive() {
                return Err(LaminationError::NegativeNonPeripheralWeight(format!(
                    "{} on {} has weight {}",
                    c.kind.name(),
                    c.carrier,
                    c.weight
                )));
            }
        }
        Ok(())
    }

    /// Weight-linear extension of the component tables. Peripheral
    /// components count through their arcs; pinning entries add to the
    /// frozen X-coordinates and have no A-coordinates.
    pub fn coords(&self, t: &Triangulation, kind: Kind) -> Result<TropicalPoint, LaminationError> {
        self.check(t)?;
        let ix = IndexSet::new(t);
        let mut out = TropicalPoint::zero(kind, &ix);
        for c in &self.components {
            let w = &c.weight;
            match c.kind.carrier() {
                Carrier::Triangle => {
                    let (tri, corner) = triangle_of(t, c)?;
                    let labels = triangle_labels(t, &ix, tri, corner);
                    let row = triangle_table(c.kind, kind).expect("triangle kind");
                    for (k, v) in row.iter().enumerate() {
                        out.coords[labels[k]] += v * w;
                    }
                }
                Carrier::Quadrilateral => {
                    let e = edge_of(t, c)?;
                    let labels = quad_labels(t, &ix, e).expect("interior");
                    let row = quad_table(c.kind, kind).expect("quad kind");
                    for (k, v) in row.iter().enumerate() {
                        out.coords[labels[k]] += v * w;
                    }
                }
                Carrier::Vertex => {
                    let v = vertex_of(t, c)?;
                    let orient = if c.kind == PeripheralCw { Orient::Cw } else { Orient::Ccw };
                    match kind {
                        Kind::X => {
                            if let Some(e) = interval_from(t, v) {
                                let s = if orient == Orient::Cw { 1 } else { 2 };
                                out.coords[ix.edge_pos(e, s)] -= w;
                            }
                        }
                        Kind::A => {
                            let mut p = GlobalPicture::empty(t);
                            add_peripheral(t, &mut p, v, orient, 1);
                            p.pair_canonically(t)?;
                            let a = crate::shear::a_coords(t, &p)?;
                            for (o, x) in out.coords.iter_mut().zip(&a.coords) {
                                *o += x * w;
                            }
                        }
                    }
                }
                Carrier::Interval => {
                    let e = interval_of(t, c)?;
                    if kind == Kind::A {
                        return Err(LaminationError::UnknownComponentKind(format!(
                            "{} has no A-coordinates",
                            c.kind.name()
                        )));
                    }
                    let s = if c.kind == EPlus { 1 } else { 2 };
                    out.coords[ix.edge_pos(e, s)] += w;
                }
            }
        }
        Ok(out)
    }

    /// `δ` collected from the pinning entries.
    pub fn delta(&self, t: &Triangulation) -> Result<Vec<[Q; 2]>, LaminationError> {
        let mut d = vec![[Q::zero(), Q::zero()]; t.num_edges()];
        for c in self.components.iter().filter(|c| c.kind.carrier() == Carrier::Interval) {
            let e = interval_of(t, c)?;
            d[e][if c.kind == EPlus { 0 } else { 1 }] += &c.weight;
        }
        Ok(d)
    }

    /// Reverse every component.
    pub fn dynkin(&self) -> Self {
        ComponentSum {
            components: self
                .components
                .iter()
                .map(|c| Component {
                    kind: c.kind.dual(),
                    ..c.clone()
                })
                .collect(),
        }
    }

    /// Drop peripheral components, pinning each boundary interval by minus
    /// the peripheral weight at its initial point.
    pub fn geometric_ensemble(&self, t: &Triangulation) -> Result<ComponentSum, LaminationError> {
        self.check(t)?;
        let mut out = Vec::new();
        for c in &self.components {
            if c.kind.carrier() != Carrier::Vertex {
                out.push(c.clone());
                continue;
            }
            let v = vertex_of(t, c)?;
            if t.vertices[v].class == VertexClass::Puncture {
                continue;
            }
            let e = interval_from(t, v).expect("special point starts an interval");
            let kind = if c.kind == PeripheralCw { EPlus } else { EMinus };
            out.push(Component::new(kind, &t.edges[e].id, -&c.weight));
        }
        Ok(ComponentSum { components: out })
    }

    /// A global picture realizing the sum, with `δ` from the pinning entries.
    ///
    /// Weights are cabled to a common unit `1/u`. Within a corner, arcs of
    /// quadrilateral components lie farthest from the vertex, then triangle
    /// arcs, then peripheral arcs; pairings are the canonical ones.
    pub fn to_picture(&self, t: &Triangulation) -> Result<PinnedLamination, LaminationError> {
        self.check(t)?;
        let delta = self.delta(t)?;
        let geometric: Vec<&Component> = self
            .components
            .iter()
            .filter(|c| c.kind.carrier() != Carrier::Interval)
            .collect();
        let u: BigInt = denom_lcm(geometric.iter().map(|c| &c.weight));
        let uq = Q::from_integer(u.clone());
        let mut p = GlobalPicture::empty(t);
        // arcs per corner by layer: 0 quadrilateral, 1 triangle, 2 peripheral
        let mut layers: Vec<[[Vec<Orient>; 3]; 3]> = vec![Default::default(); t.num_triangles()];
        let mut hc: Vec<Option<(HoneycombOrient, u32)>> = vec![None; t.num_triangles()];
        let mut add_hc = |tri: usize, o: HoneycombOrient, n: u32, id: &str| -> Result<(), LaminationError> {
            match &mut hc[tri] {
                None => hc[tri] = Some((o, n)),
                Some((o2, m)) if *o2 == o => *m += n,
                Some(_) => return Err(mismatch(format!("sink and source honeycombs share triangle {id}"))),
            }
            Ok(())
        };
        for c in &geometric {
            let k: u32 = (&c.weight * &uq)
                .to_integer()
                .try_into()
                .map_err(|_| LaminationError::NegativeNonPeripheralWeight(c.carrier.clone()))?;
            let ku = k as usize;
            match c.kind.carrier() {
                Carrier::Triangle => {
                    let (tri, corner) = triangle_of(t, c)?;
                    match c.kind {
                        Alpha => layers[tri][1][corner].extend(vec![Orient::Ccw; ku]),
                        AlphaStar => layers[tri][1][corner].extend(vec![Orient::Cw; ku]),
                        TauPlus => add_hc(tri, HoneycombOrient::Sink, k, &c.carrier)?,
                        _ => add_hc(tri, HoneycombOrient::Source, k, &c.carrier)?,
                    }
                }
                Carrier::Quadrilateral => {
                    let e = edge_of(t, c)?;
                    let (tl, il) = t.left_slot(e);
                    let (tr, ir) = t.right_slot(e).expect("interior");
                    let (l_top, l_bot) = ((il + 1) % 3, il);
                    let (r_top, r_bot) = (ir, (ir + 1) % 3);
                    let mut arc = |tri: usize, corner: usize, o: Orient| {
                        layers[tri][0][corner].extend(vec![o; ku]);
                    };
                    use HoneycombOrient::{Sink, Source};
                    match c.kind {
                        AlphaPlus => {
                            arc(tl, l_top, Orient::Ccw);
                            arc(tr, r_bot, Orient::Cw);
                        }
                        AlphaPlusRev => {
                            arc(tl, l_top, Orient::Cw);
                            arc(tr, r_bot, Orient::Ccw);
                        }
                        AlphaMinus => {
                            arc(tl, l_bot, Orient::Cw);
                            arc(tr, r_top, Orient::Ccw);
                        }
                        AlphaMinusRev => {
                            arc(tl, l_bot, Orient::Ccw);
                            arc(tr, r_top, Orient::Cw);
                        }
                        TauPlusL => {
                            arc(tr, r_top, Orient::Cw);
                            add_hc(tl, Sink, k, &t.triangles[tl].id)?;
                        }
                        TauPlusR => {
                            arc(tr, r_bot, Orient::Ccw);
                            add_hc(tl, Sink, k, &t.triangles[tl].id)?;
                        }
                        TauMinusL => {
                            arc(tr, r_top, Orient::Ccw);
                            add_hc(tl, Source, k, &t.triangles[tl].id)?;
                        }
                        TauMinusR => {
                            arc(tr, r_bot, Orient::Cw);
                            add_hc(tl, Source, k, &t.triangles[tl].id)?;
                        }
                        H => {
                            add_hc(tl, Sink, k, &t.triangles[tl].id)?;
                            add_hc(tr, Source, k, &t.triangles[tr].id)?;
                        }
                        HRev => {
                            add_hc(tl, Source, k, &t.triangles[tl].id)?;
                            add_hc(tr, Sink, k, &t.triangles[tr].id)?;
                        }
                        _ => unreachable!(),
                    }
                }
                Carrier::Vertex => {
                    let v = vertex_of(t, c)?;
                    let o = if c.kind == PeripheralCw { Orient::Cw } else { Orient::Ccw };
                    for (tri, corner) in t.corners_around(v) {
                        layers[tri][2][corner].extend(vec![o; ku]);
                    }
                }
                Carrier::Interval => unreachable!(),
            }
        }
        for (tri, tp) in p.triangles.iter_mut().enumerate() {
            tp.honeycomb = hc[tri].filter(|h| h.1 > 0).map(|(orient, height)| Honeycomb {
                orient,
                height,
                weight: Q::one(),
            });
            for corner in 0..3 {
                tp.corners[corner] = (0..3)
                    .flat_map(|layer| layers[tri][layer][corner].iter().map(|&o| CornerArc::unit(o)))
                    .collect();
            }
        }
        p.pair_canonically(t)?;
        p.validate(t)?;
        let picture = if u.is_one() { p } else { p.scaled(&(q(1) / uq)) };
        Ok(PinnedLamination { picture, delta })
    }
}

/// Put one arc of the given orientation at every corner around `v`.
pub fn add_peripheral(t: &Triangulation, p: &mut GlobalPicture, v: usize, o: Orient, copies: usize) {
    for (tri, corner) in t.corners_around(v) {
        for _ in 0..copies {
            p.triangles[tri].corners[corner].push(CornerArc::unit(o));
        }
    }
}

/// Every single component that fits on `t`, with weight 1. Pinning shifts
/// `e±` are left out.
pub fn single_components(t: &Triangulation) -> Vec<Component> {
    let mut out = Vec::new();
    for kind in ALL_KINDS {
        let carriers: Vec<(String, Option<usize>)> = match kind.carrier() {
            Carrier::Triangle if matches!(kind, Alpha | AlphaStar) => t
                .triangles
                .iter()
                .flat_map(|tr| (0..3).map(move |c| (tr.id.clone(), Some(c))))
                .collect(),
            Carrier::Triangle => t.triangles.iter().map(|tr| (tr.id.clone(), None)).collect(),
            Carrier::Vertex => t.vertices.iter().map(|v| (v.id.clone(), None)).collect(),
            Carrier::Interval => continue,
            Carrier::Quadrilateral => t.edges.iter().map(|e| (e.id.clone(), None)).collect(),
        };
        for (c, corner) in carriers {
            let mut x = Component::new(kind, &c, Q::one());
            x.corner = corner;
            if ComponentSum::new(vec![x.clone()]).check(t).is_ok() {
                out.push(x);
            }
        }
    }
    out
}
