use sl3_surface::{flip_edge, Triangulation};

use crate::{exchange_matrix, mutate_matrix, ExchangeMatrix, IndexSet, SeedError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MutationStep {
    /// Position in the index set.
    Mutate(usize),
    /// Position `i` moves to `σ[i]`.
    Permute(Vec<usize>),
}

pub fn apply_steps(eps: &ExchangeMatrix, steps: &[MutationStep]) -> Result<ExchangeMatrix, SeedError> {
    let mut m = eps.clone();
    for step in steps {
        m = match step {
            MutationStep::Mutate(k) => mutate_matrix(&m, *k)?,
            MutationStep::Permute(sigma) => {
                check_permutation(&m, sigma)?;
                m.permuted(sigma)
            }
        };
    }
    Ok(m)
}

fn check_permutation(m: &ExchangeMatrix, sigma: &[usize]) -> Result<(), SeedError> {
    let n = m.len();
    let mut hit = vec![false; n];
    if sigma.len() != n {
        return Err(SeedError::BadPermutation(format!("length {} for {n} indices", sigma.len())));
    }
    for (i, &j) in sigma.iter().enumerate() {
        if j >= n || hit[j] {
            return Err(SeedError::BadPermutation(format!("not a bijection at {i}")));
        }
        if m.frozen[i] != m.frozen[j] {
            return Err(SeedError::BadPermutation(format!("{} and {} differ in frozenness", m.ids[i], m.ids[j])));
        }
        hit[j] = true;
    }
    Ok(())
}

/// Positions of the twelve local labels around an interior edge.
///
/// `1 = E:2`, `2 = T_L`, `3 = E:1`, `4 = T_R`; then the outer sides read
/// ccw: `5,6` on top->left, `7,8` on left->bottom, `9,10` on
/// bottom->right, `11,12` on right->top. Outer labels may share a
/// position when the quadrilateral is not embedded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipLabels {
    pub pos: [usize; 12],
}

impl FlipLabels {
    pub fn new(t: &Triangulation, ix: &IndexSet, edge: usize) -> Option<Self> {
        let q = t.quad(edge)?;
        let ab = |slot| {
            let s = t.side(slot);
            let (x, y) = if s.reversed { (2, 1) } else { (1, 2) };
            (ix.edge_pos(s.edge, x), ix.edge_pos(s.edge, y))
        };
        let (a5, a6) = ab(q.a);
        let (a7, a8) = ab(q.b);
        let (a9, a10) = ab(q.c);
        let (a11, a12) = ab(q.d);
        Some(FlipLabels {
            pos: [
                ix.edge_pos(edge, 2),
                ix.face_pos(q.tl),
                ix.edge_pos(edge, 1),
                ix.face_pos(q.tr),
                a5,
                a6,
                a7,
                a8,
                a9,
                a10,
                a11,
                a12,
            ],
        })
    }

    /// Whether the twelve labels name twelve distinct indices.
    pub fn embedded(&self) -> bool {
        let mut v = self.pos.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len() == 12
    }
}

/// Mutations at labels 1, 3, 4, 2 followed by the relabeling onto the
/// flipped triangulation.
///
/// The relabeling is found by matching the mutated matrix against the
/// freshly built one, trying first the correspondence
/// `1 -> T'_L, 2 -> E':1, 3 -> T'_R, 4 -> E':2`.
pub fn flip_mutation_sequence(
    t: &Triangulation,
    id: &str,
) -> Result<(Vec<MutationStep>, Triangulation), SeedError> {
    let (t2, _) = flip_edge(t, id)?;
    let e = t.edge_by_id(id)?;
    let (ix, eps) = exchange_matrix(t);
    let (_, target) = exchange_matrix(&t2);
    let l = FlipLabels::new(t, &ix, e).expect("interior edge");
    let [p1, p2, p3, p4] = [l.pos[0], l.pos[1], l.pos[2], l.pos[3]];
    let mut steps: Vec<MutationStep> = [p1, p3, p4, p2].into_iter().map(MutationStep::Mutate).collect();
    let mutated = apply_steps(&eps, &steps)?;

    // Slots of the flipped seed, in the preferred order for labels 1..4.
    let src = [p1, p2, p3, p4];
    let dst = [ix.face_pos(l_tl(t, e)), ix.edge_pos(e, 1), ix.face_pos(l_tr(t, e)), ix.edge_pos(e, 2)];
    for perm in permutations4() {
        let mut sigma: Vec<usize> = (0..ix.len()).collect();
        for (k, &p) in perm.iter().enumerate() {
            sigma[src[k]] = dst[p];
        }
        if mutated.permuted(&sigma).entries == target.entries {
            steps.push(MutationStep::Permute(sigma));
            return Ok((steps, t2));
        }
    }
    Err(SeedError::QuiverMismatch(format!("no relabeling matches the flip at {id}")))
}

fn l_tl(t: &Triangulation, e: usize) -> usize {
    t.left_slot(e).0
}

fn l_tr(t: &Triangulation, e: usize) -> usize {
    t.right_slot(e).expect("interior edge").0
}

/// All permutations of 0..4, identity first.
fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut s = p;
                    s.sort_unstable();
                    if s == [0, 1, 2, 3] {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// One mutation per face, then `E:1 <-> E:2` on every edge.
pub fn dynkin_mutation_sequence(t: &Triangulation) -> Vec<MutationStep> {
    let ix = IndexSet::new(t);
    let mut steps: Vec<MutationStep> = (0..t.num_triangles())
        .map(|f| MutationStep::Mutate(ix.face_pos(f)))
        .collect();
    let mut sigma: Vec<usize> = (0..ix.len()).collect();
    for e in 0..t.num_edges() {
        let (a, b) = (ix.edge_pos(e, 1), ix.edge_pos(e, 2));
        sigma[a] = b;
        sigma[b] = a;
    }
    steps.push(MutationStep::Permute(sigma));
    steps
}
