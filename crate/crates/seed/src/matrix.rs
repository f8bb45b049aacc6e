use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use sl3_rational::{fmt_q, frac, parse_q, pos, q, Q};
use sl3_surface::{EdgeKind, Triangulation};

use crate::{IndexSet, SeedError};

/// A square matrix over `I(Δ)`; rows and columns follow the index set order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    pub ids: Vec<String>,
    pub frozen: Vec<bool>,
    pub entries: Vec<Vec<Q>>,
}

impl ExchangeMatrix {
    pub fn zero(ix: &IndexSet) -> Self {
        let n = ix.len();
        ExchangeMatrix {
            ids: ix.ids.clone(),
            frozen: ix.frozen.clone(),
            entries: vec![vec![Q::zero(); n]; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    fn arrow(&mut self, i: usize, j: usize, w: &Q) {
        self.entries[i][j] += w;
        self.entries[j][i] -= w;
    }

    pub fn add(&self, other: &ExchangeMatrix) -> ExchangeMatrix {
        let mut out = self.clone();
        for (row, orow) in out.entries.iter_mut().zip(&other.entries) {
            for (x, y) in row.iter_mut().zip(orow) {
                *x += y;
            }
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| (&self.entries[i][j] + &self.entries[j][i]).is_zero()))
    }

    /// Relabel: entry `(i, j)` moves to `(σ(i), σ(j))`.
    pub fn permuted(&self, sigma: &[usize]) -> ExchangeMatrix {
        let n = self.len();
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[sigma[i]][sigma[j]] = self.entries[i][j].clone();
            }
        }
        out
    }

    pub fn to_doc(&self) -> MatrixDoc {
        let n = self.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i..n {
                let x = &self.entries[i][j];
                if !x.is_zero() {
                    entries.push((self.ids[i].clone(), self.ids[j].clone(), fmt_q(x)));
                }
            }
        }
        MatrixDoc {
            indices: self.ids.clone(),
            frozen: (0..n).filter(|&i| self.frozen[i]).map(|i| self.ids[i].clone()).collect(),
            entries,
        }
    }

    /// Rebuild from the upper-triangular listing; `symmetric` selects the
    /// fill rule for the lower half.
    pub fn from_doc(doc: &MatrixDoc, symmetric: bool) -> Result<Self, SeedError> {
        let n = doc.indices.len();
        let find = |id: &str| {
            doc.indices
                .iter()
                .position(|x| x == id)
                .ok_or_else(|| SeedError::UnknownIndex(id.to_string()))
        };
        let mut m = ExchangeMatrix {
            ids: doc.indices.clone(),
            frozen: vec![false; n],
            entries: vec![vec![Q::zero(); n]; n],
        };
        for f in &doc.frozen {
            m.frozen[find(f)?] = true;
        }
        for (a, b, x) in &doc.entries {
            let (i, j) = (find(a)?, find(b)?);
            let x = parse_q(x).map_err(|e| SeedError::UnknownIndex(e.to_string()))?;
            m.entries[i][j] = x.clone();
            if i != j {
                m.entries[j][i] = if symmetric { x } else { -x };
            }
        }
        Ok(m)
    }
}

/// Wire form: nonzero upper-triangular entries only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub indices: Vec<String>,
    pub frozen: Vec<String>,
    pub entries: Vec<(String, String, String)>,
}

/// Amalgamate the per-triangle quivers.
///
/// On each side, read ccw, let `a` be the first point and `b` the second.
/// Each side contributes `a -> face`, `face -> b`, a half arrow `b -> a`,
/// and `b -> a'` where `a'` is the first point of the next side.
pub fn exchange_matrix(t: &Triangulation) -> (IndexSet, ExchangeMatrix) {
    let ix = IndexSet::new(t);
    let mut m = ExchangeMatrix::zero(&ix);
    let one = q(1);
    let h = frac(1, 2);
    for (ti, tri) in t.triangles.iter().enumerate() {
        let f = ix.face_pos(ti);
        let ab: Vec<(usize, usize)> = tri
            .sides
            .iter()
            .map(|s| {
                let (x, y) = if s.reversed { (2, 1) } else { (1, 2) };
                (ix.edge_pos(s.edge, x), ix.edge_pos(s.edge, y))
            })
            .collect();
        for s in 0..3 {
            let (a, b) = ab[s];
            let next_a = ab[(s + 1) % 3].0;
            m.arrow(a, f, &one);
            m.arrow(f, b, &one);
            m.arrow(b, a, &h);
            m.arrow(b, next_a, &one);
        }
    }
    (ix, m)
}

/// The symmetric frozen correction: `-1` on the diagonal and `1/2` between
/// the two indices of each boundary interval.
pub fn m_matrix(t: &Triangulation) -> ExchangeMatrix {
    let ix = IndexSet::new(t);
    let mut m = ExchangeMatrix::zero(&ix);
    for (e, edge) in t.edges.iter().enumerate() {
        if edge.kind != EdgeKind::Boundary {
            continue;
        }
        let (p, r) = (ix.edge_pos(e, 1), ix.edge_pos(e, 2));
        m.entries[p][p] = q(-1);
        m.entries[r][r] = q(-1);
        m.entries[p][r] = frac(1, 2);
        m.entries[r][p] = frac(1, 2);
    }
    m
}

/// `ε + m`.
pub fn extended_matrix(t: &Triangulation) -> ExchangeMatrix {
    exchange_matrix(t).1.add(&m_matrix(t))
}

/// `ε'_ij = -ε_ij` if `k ∈ {i, j}`, else `ε_ij + sgn(ε_ik)[ε_ik ε_kj]_+`.
pub fn mutate_matrix(eps: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix, SeedError> {
    if eps.frozen[k] {
        return Err(SeedError::FrozenIndexMutation(eps.ids[k].clone()));
    }
    let n = eps.len();
    let mut out = eps.clone();
    for i in 0..n {
        for j in 0..n {
            let e = &eps.entries[i][j];
            out.entries[i][j] = if i == k || j == k {
                -e
            } else {
                let eik = &eps.entries[i][k];
                let corr = pos(&(eik * &eps.entries[k][j]));
                if eik.is_negative() {
                    e - corr
                } else {
                    e + corr
                }
            };
        }
    }
    Ok(out)
}
