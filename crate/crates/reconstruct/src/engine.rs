//! Pinned strand sets.
//!
//! Every corner at a marked point with a stack carries an infinite
//! alternating column of unit corner arcs, nearest to the vertex and
//! farthest-first clockwise. Along a side, the strands of one direction
//! family get odd positions: the `k`-th explicit strand sits at `2k+1`, the
//! `j`-th stack arc at the initial corner at `1-2j` and the `j`-th stack arc
//! at the terminal corner at `2n+2j-1`, `n` being the number of explicit
//! strands in the family. A pinned edge with constant `c` joins positions
//! `P` and `P'` across it iff `P + P' = 2c`.
//!
//! Around a marked point the stack arcs of one orientation form a helix:
//! crossing each edge shifts the stack index by a constant once it exceeds
//! the pinning threshold. Helices with zero total shift close up into
//! peripheral loops (or boundary-parallel arcs at special points), which are
//! dropped. The others spiral into a puncture; they are kept up to two turns
//! past the last tail start and cut there, leaving signed puncture ends.

use std::collections::{HashMap, HashSet};

use sl3_lamination::{GlobalPicture, Orient, PunctureSign, StrandKind, Strand};
use sl3_surface::{Slot, Triangulation, VertexClass};

use crate::ReconstructError;

/// How the two sides of an edge are joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeRule {
    Boundary,
    /// Constants for the family leaving `T_L` and for the one entering it.
    Pinned([i64; 2]),
    /// Explicit strands keep the pairing of the base picture; stack arcs
    /// pair with the stack arc of the same index at the same end.
    Explicit,
}

pub struct Setup<'a> {
    pub t: &'a Triangulation,
    /// Explicit strands, unit weights.
    pub base: GlobalPicture,
    pub rules: Vec<EdgeRule>,
    /// Marked points that carry stacks.
    pub stacks: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum SStrand {
    /// Index into the base side list.
    Explicit(usize),
    Virtual { corner: usize, orient: Orient, j: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum ArcId {
    Explicit { tri: usize, corner: usize, idx: usize },
    Virtual { tri: usize, corner: usize, orient: Orient, j: i64 },
}

impl ArcId {
    fn tri(self) -> usize {
        match self {
            ArcId::Explicit { tri, .. } | ArcId::Virtual { tri, .. } => tri,
        }
    }

    fn corner(self) -> usize {
        match self {
            ArcId::Explicit { corner, .. } | ArcId::Virtual { corner, .. } => corner,
        }
    }
}

enum Across {
    Boundary,
    /// An explicit strand left open at a puncture.
    Open,
    Strand(usize, usize, SStrand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Boundary,
    Open,
    Leg,
    Cut,
}

struct Helix {
    corners: Vec<Slot>,
    cyclic: bool,
    off: Vec<i64>,
    shift: i64,
    orient: Orient,
}

pub struct Output {
    pub picture: GlobalPicture,
    /// Largest stack index at which pins still reach explicit strands or the
    /// opposite end of an edge.
    pub threshold: i64,
}

const BIG: i64 = 1 << 40;

fn other_side(corner: usize, side: usize) -> usize {
    if side == corner {
        (corner + 2) % 3
    } else {
        corner
    }
}

struct Engine<'a> {
    t: &'a Triangulation,
    base: &'a GlobalPicture,
    rules: &'a [EdgeRule],
    strands: Vec<[Vec<Strand>; 3]>,
    /// Per side and family (0 leaves the triangle): base indices in order.
    fam: Vec<[[Vec<usize>; 2]; 3]>,
    rank: Vec<[Vec<usize>; 3]>,
    partner: HashMap<(usize, usize, usize), (usize, usize, usize)>,
}

impl<'a> Engine<'a> {
    fn new(s: &'a Setup<'a>) -> Self {
        let t = s.t;
        let mut strands = Vec::new();
        let mut fam = Vec::new();
        let mut rank = Vec::new();
        for tri in 0..t.num_triangles() {
            let st: [Vec<Strand>; 3] = std::array::from_fn(|side| s.base.side_strands(tri, side));
            let mut f: [[Vec<usize>; 2]; 3] = Default::default();
            let mut r: [Vec<usize>; 3] = Default::default();
            for side in 0..3 {
                for (i, x) in st[side].iter().enumerate() {
                    let fi = if x.exits { 0 } else { 1 };
                    r[side].push(f[side][fi].len());
                    f[side][fi].push(i);
                }
            }
            strands.push(st);
            fam.push(f);
            rank.push(r);
        }
        let mut partner = HashMap::new();
        for e in 0..t.num_edges() {
            let Some((tr, ir)) = t.right_slot(e) else { continue };
            let (tl, il) = t.left_slot(e);
            for &(a, b) in &s.base.pairings[e] {
                partner.insert((tl, il, a), (tr, ir, b));
                partner.insert((tr, ir, b), (tl, il, a));
            }
        }
        Engine {
            t,
            base: &s.base,
            rules: &s.rules,
            strands,
            fam,
            rank,
            partner,
        }
    }

    fn position(&self, tri: usize, side: usize, s: SStrand) -> (usize, i64) {
        match s {
            SStrand::Explicit(i) => {
                let f = if self.strands[tri][side][i].exits { 0 } else { 1 };
                (f, 2 * self.rank[tri][side][i] as i64 + 1)
            }
            SStrand::Virtual { corner, orient, j } => {
                if corner == side {
                    let f = if orient == Orient::Cw { 0 } else { 1 };
                    (f, 1 - 2 * j)
                } else {
                    let f = if orient == Orient::Ccw { 0 } else { 1 };
                    let n = self.fam[tri][side][f].len() as i64;
                    (f, 2 * n + 2 * j - 1)
                }
            }
        }
    }

    fn decode(&self, tri: usize, side: usize, f: usize, p: i64) -> SStrand {
        let n = self.fam[tri][side][f].len() as i64;
        if p <= -1 {
            SStrand::Virtual {
                corner: side,
                orient: if f == 0 { Orient::Cw } else { Orient::Ccw },
                j: (1 - p) / 2,
            }
        } else if p >= 2 * n + 1 {
            SStrand::Virtual {
                corner: (side + 1) % 3,
                orient: if f == 0 { Orient::Ccw } else { Orient::Cw },
                j: (p - 2 * n + 1) / 2,
            }
        } else {
            SStrand::Explicit(self.fam[tri][side][f][((p - 1) / 2) as usize])
        }
    }

    fn across(&self, tri: usize, side: usize, s: SStrand) -> Across {
        let t = self.t;
        let e = t.triangles[tri].sides[side].edge;
        let l = t.left_slot(e);
        let Some(r) = t.right_slot(e) else { return Across::Boundary };
        let is_l = (tri, side) == l;
        let o = if is_l { r } else { l };
        match &self.rules[e] {
            EdgeRule::Boundary => Across::Boundary,
            EdgeRule::Pinned(c) => {
                let (f, p) = self.position(tri, side, s);
                let cf = if is_l { c[f] } else { c[1 - f] };
                Across::Strand(o.0, o.1, self.decode(o.0, o.1, 1 - f, 2 * cf - p))
            }
            EdgeRule::Explicit => match s {
                SStrand::Explicit(i) => match self.partner.get(&(tri, side, i)) {
                    Some(&(t2, s2, i2)) => Across::Strand(t2, s2, SStrand::Explicit(i2)),
                    None => Across::Open,
                },
                SStrand::Virtual { corner, orient, j } => {
                    let corner = if corner == side { (o.1 + 1) % 3 } else { o.1 };
                    Across::Strand(o.0, o.1, SStrand::Virtual { corner, orient, j })
                }
            },
        }
    }

    fn turn(&self, tri: usize, side: usize, s: SStrand) -> i32 {
        match s {
            SStrand::Explicit(i) => self.strands[tri][side][i].turn(),
            SStrand::Virtual { corner, .. } => {
                if corner == side {
                    -1
                } else {
                    1
                }
            }
        }
    }

    fn strand_of(&self, a: ArcId, side: usize) -> SStrand {
        match a {
            ArcId::Explicit { tri, corner, idx } => SStrand::Explicit(self.base.arc_position(tri, corner, idx, side)),
            ArcId::Virtual { corner, orient, j, .. } => SStrand::Virtual { corner, orient, j },
        }
    }

    /// The arc a strand belongs to; `None` for a honeycomb leg.
    fn arc_of(&self, tri: usize, side: usize, s: SStrand) -> Option<ArcId> {
        match s {
            SStrand::Explicit(i) => match self.strands[tri][side][i].kind {
                StrandKind::Arc { corner, idx } => Some(ArcId::Explicit { tri, corner, idx }),
                StrandKind::Leg { .. } => None,
            },
            SStrand::Virtual { corner, orient, j } => Some(ArcId::Virtual { tri, corner, orient, j }),
        }
    }

    fn threshold(&self) -> i64 {
        let t = self.t;
        let mut out = 0;
        for e in 0..t.num_edges() {
            let EdgeRule::Pinned(c) = &self.rules[e] else { continue };
            let (tl, il) = t.left_slot(e);
            let (tr, ir) = t.right_slot(e).expect("pinned edges are interior");
            for f in 0..2 {
                let nl = self.fam[tl][il][f].len() as i64;
                let nr = self.fam[tr][ir][1 - f].len() as i64;
                out = out.max((c[f] - nl).abs()).max((c[f] - nr).abs());
            }
        }
        out
    }

    fn helix(&self, v: usize, orient: Orient) -> Result<Helix, ReconstructError> {
        let t = self.t;
        let corners = t.corners_around(v);
        let m = corners.len();
        let cyclic = t.vertices[v].class == VertexClass::Puncture;
        let steps = if cyclic { m } else { m - 1 };
        let mut deltas = Vec::with_capacity(steps);
        for k in 0..steps {
            let (t2, c2) = corners[(k + 1) % m];
            let arc = SStrand::Virtual { corner: c2, orient, j: BIG };
            match self.across(t2, c2, arc) {
                Across::Strand(tk, _, SStrand::Virtual { corner, orient: o, j }) if (tk, corner) == corners[k] && o == orient => {
                    deltas.push(j - BIG)
                }
                _ => {
                    return Err(ReconstructError::TruncationTooShallow(format!(
                        "stack at {} does not continue around the point",
                        t.vertices[v].id
                    )))
                }
            }
        }
        let mut off = vec![0i64; m];
        for k in 1..m {
            off[k] = off[k - 1] + deltas[k - 1];
        }
        let shift = if cyclic { deltas.iter().sum() } else { 0 };
        Ok(Helix {
            corners,
            cyclic,
            off,
            shift,
            orient,
        })
    }

    /// Next stack arc along the helix, away from (`forward`) or towards the
    /// region where indices grow.
    fn step(&self, h: &Helix, k: usize, j: i64, forward: bool) -> Option<(usize, i64)> {
        let m = h.corners.len();
        let (tri, c) = h.corners[k];
        let ccw = forward == (h.shift < 0);
        let (side, nb) = if ccw {
            ((c + 2) % 3, (k + 1) % m)
        } else {
            (c, (k + m - 1) % m)
        };
        match self.across(tri, side, SStrand::Virtual { corner: c, orient: h.orient, j }) {
            Across::Strand(t2, _, SStrand::Virtual { corner, orient, j }) if (t2, corner) == h.corners[nb] && orient == h.orient => {
                Some((nb, j))
            }
            _ => None,
        }
    }

    /// Largest helix level `j + off` that is kept.
    fn level(&self, h: &Helix, threshold: i64) -> i64 {
        let reg = threshold + h.off.iter().copied().max().unwrap_or(0);
        if !h.cyclic || h.shift == 0 {
            return reg;
        }
        let s = h.shift.abs();
        let mut core = i64::MIN;
        let mut start = i64::MIN;
        for k in 0..h.corners.len() {
            for j in 1..=(reg - h.off[k]) {
                let r = j + h.off[k];
                let (mut ck, mut cj) = (k, j);
                let tail = loop {
                    if cj + h.off[ck] > reg {
                        break true;
                    }
                    match self.step(h, ck, cj, true) {
                        Some((nk, nj)) => (ck, cj) = (nk, nj),
                        None => break false,
                    }
                };
                if !tail {
                    core = core.max(r);
                } else if self.step(h, k, j, false).is_none() {
                    start = start.max(r);
                }
            }
        }
        let lim = core.max(start.saturating_add(2 * s));
        if lim == i64::MIN {
            reg
        } else {
            lim
        }
    }
}

/// Materialize the stacks, drop peripheral travelers, cut spirals and pair
/// everything. The result has unit weights.
pub fn run(setup: &Setup, depth: Option<i64>) -> Result<Output, ReconstructError> {
    let t = setup.t;
    let eng = Engine::new(setup);
    let threshold = eng.threshold();
    if let Some(n) = depth {
        if n < threshold {
            return Err(ReconstructError::TruncationTooShallow(format!(
                "depth {n} is below the pinning threshold {threshold}"
            )));
        }
    }

    // per (tri, corner, orient): number of stack arcs kept
    let mut jmax: HashMap<(usize, usize, Orient), i64> = HashMap::new();
    let mut spiral: HashSet<(usize, usize, Orient)> = HashSet::new();
    for v in 0..t.vertices.len() {
        if !setup.stacks[v] {
            continue;
        }
        for orient in [Orient::Cw, Orient::Ccw] {
            let h = eng.helix(v, orient)?;
            let lim = eng.level(&h, threshold);
            for (k, &(tri, c)) in h.corners.iter().enumerate() {
                jmax.insert((tri, c, orient), (lim - h.off[k]).max(0));
                if h.cyclic && h.shift != 0 {
                    spiral.insert((tri, c, orient));
                }
            }
        }
    }
    let kept = |a: ArcId, removed: &HashSet<ArcId>| -> bool {
        if removed.contains(&a) {
            return false;
        }
        match a {
            ArcId::Explicit { .. } => true,
            ArcId::Virtual { tri, corner, orient, j } => j >= 1 && j <= *jmax.get(&(tri, corner, orient)).unwrap_or(&0),
        }
    };

    // every arc, explicit first
    let mut arcs = Vec::new();
    for tri in 0..t.num_triangles() {
        for corner in 0..3 {
            for idx in 0..setup.base.triangles[tri].corners[corner].len() {
                arcs.push(ArcId::Explicit { tri, corner, idx });
            }
            for orient in [Orient::Cw, Orient::Ccw] {
                for j in 1..=*jmax.get(&(tri, corner, orient)).unwrap_or(&0) {
                    arcs.push(ArcId::Virtual { tri, corner, orient, j });
                }
            }
        }
    }

    // trace travelers and drop the peripheral ones
    let mut removed: HashSet<ArcId> = HashSet::new();
    let mut seen: HashSet<ArcId> = HashSet::new();
    for &start in &arcs {
        if seen.contains(&start) {
            continue;
        }
        let mut members = vec![start];
        seen.insert(start);
        let mut hugging = true;
        let mut ends = Vec::new();
        let mut closed = false;
        let sides = [start.corner(), (start.corner() + 2) % 3];
        for (dir, &first_side) in sides.iter().enumerate() {
            if closed {
                break;
            }
            let (mut cur, mut side) = (start, first_side);
            loop {
                let tri = cur.tri();
                let st = eng.strand_of(cur, side);
                match eng.across(tri, side, st) {
                    Across::Boundary => {
                        ends.push(End::Boundary);
                        break;
                    }
                    Across::Open => {
                        ends.push(End::Open);
                        break;
                    }
                    Across::Strand(t2, s2, st2) => {
                        if eng.turn(tri, side, st) + eng.turn(t2, s2, st2) != 0 {
                            hugging = false;
                        }
                        let Some(next) = eng.arc_of(t2, s2, st2) else {
                            ends.push(End::Leg);
                            break;
                        };
                        if !kept(next, &removed) {
                            ends.push(End::Cut);
                            break;
                        }
                        if next == start {
                            debug_assert_eq!(dir, 0);
                            closed = true;
                            break;
                        }
                        if seen.insert(next) {
                            members.push(next);
                        }
                        side = other_side(next.corner(), s2);
                        cur = next;
                    }
                }
            }
        }
        let at_stack = setup.stacks[t.corner_vertex(start.tri(), start.corner())];
        let has_virtual = members.iter().any(|a| matches!(a, ArcId::Virtual { .. }));
        let bounded = closed || ends.iter().all(|e| *e == End::Boundary);
        if hugging && bounded && (has_virtual || at_stack) {
            removed.extend(members.iter().copied());
        }
    }

    // assemble
    let mut pic = GlobalPicture::empty(t);
    let mut virt: Vec<[Vec<(Orient, i64)>; 3]> = vec![Default::default(); t.num_triangles()];
    let mut expl: Vec<[Vec<usize>; 3]> = vec![Default::default(); t.num_triangles()];
    for &a in &arcs {
        if !kept(a, &removed) {
            continue;
        }
        match a {
            ArcId::Explicit { tri, corner, idx } => expl[tri][corner].push(idx),
            ArcId::Virtual { tri, corner, orient, j } => virt[tri][corner].push((orient, j)),
        }
    }
    let depth_of = |(o, j): (Orient, i64)| if o == Orient::Cw { 2 * j - 1 } else { 2 * j };
    for tri in 0..t.num_triangles() {
        let tp = &mut pic.triangles[tri];
        tp.honeycomb = setup.base.triangles[tri].honeycomb.clone();
        for c in 0..3 {
            virt[tri][c].sort_by_key(|&x| depth_of(x));
            tp.corners[c] = expl[tri][c]
                .iter()
                .map(|&i| setup.base.triangles[tri].corners[c][i].clone())
                .chain(virt[tri][c].iter().map(|&(o, _)| sl3_lamination::CornerArc::unit(o)))
                .collect();
        }
    }
    // final side lists in engine terms
    let mut lists: Vec<[Vec<SStrand>; 3]> = Vec::new();
    let mut index: Vec<[HashMap<SStrand, usize>; 3]> = Vec::new();
    for tri in 0..t.num_triangles() {
        let mut l: [Vec<SStrand>; 3] = Default::default();
        for side in 0..3 {
            let c0 = side;
            let c1 = (side + 1) % 3;
            for &(orient, j) in virt[tri][c0].iter().rev() {
                l[side].push(SStrand::Virtual { corner: c0, orient, j });
            }
            for (i, s) in eng.strands[tri][side].iter().enumerate() {
                let keep = match s.kind {
                    StrandKind::Arc { corner, idx } => kept(ArcId::Explicit { tri, corner, idx }, &removed),
                    StrandKind::Leg { .. } => true,
                };
                if keep {
                    l[side].push(SStrand::Explicit(i));
                }
            }
            for &(orient, j) in &virt[tri][c1] {
                l[side].push(SStrand::Virtual { corner: c1, orient, j });
            }
        }
        let ix = std::array::from_fn(|side| l[side].iter().enumerate().map(|(i, s)| (*s, i)).collect());
        lists.push(l);
        index.push(ix);
    }
    for e in 0..t.num_edges() {
        let Some((tr, ir)) = t.right_slot(e) else { continue };
        let (tl, il) = t.left_slot(e);
        for (slot, is_l) in [((tl, il), true), ((tr, ir), false)] {
            for (a, &st) in lists[slot.0][slot.1].iter().enumerate() {
                match eng.across(slot.0, slot.1, st) {
                    Across::Boundary => unreachable!("interior edge"),
                    Across::Open => {
                        let SStrand::Explicit(i) = st else { unreachable!() };
                        let sign = setup.base.sign_at(slot.0, slot.1, i).unwrap_or(1);
                        pic.puncture_signs.push(PunctureSign {
                            tri: slot.0,
                            side: slot.1,
                            strand: a,
                            sign,
                        });
                    }
                    Across::Strand(t2, s2, st2) => match index[t2][s2].get(&st2) {
                        Some(&b) => {
                            if is_l {
                                pic.pairings[e].push((a, b));
                            }
                        }
                        None => {
                            let SStrand::Virtual { corner, orient, .. } = st else {
                                return Err(ReconstructError::TruncationTooShallow(format!(
                                    "edge {}: explicit strand {a} lost its partner",
                                    t.edges[e].id
                                )));
                            };
                            if !spiral.contains(&(slot.0, corner, orient)) {
                                return Err(ReconstructError::TruncationTooShallow(format!(
                                    "edge {}: stack arc {a} reaches the truncation boundary",
                                    t.edges[e].id
                                )));
                            }
                            pic.puncture_signs.push(PunctureSign {
                                tri: slot.0,
                                side: slot.1,
                                strand: a,
                                sign: if corner == slot.1 { 1 } else { -1 },
                            });
                        }
                    },
                }
            }
        }
        pic.pairings[e].sort_unstable();
    }
    pic.puncture_signs.sort_unstable();
    pic.validate(t)?;
    Ok(Output { picture: pic, threshold })
}
