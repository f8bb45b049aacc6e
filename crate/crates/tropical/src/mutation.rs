use num_traits::{Signed, Zero};
use sl3_rational::{max, pos, Q};
use sl3_seed::{exchange_matrix, flip_mutation_sequence, mutate_matrix, ExchangeMatrix, MutationStep};
use sl3_surface::Triangulation;

use crate::{Kind, TropicalError, TropicalPoint};

fn check(p: &TropicalPoint, eps: &ExchangeMatrix, k: usize, kind: Kind) -> Result<(), TropicalError> {
    if p.kind != kind {
        return Err(TropicalError::KindMismatch { expected: kind });
    }
    p.check_seed(eps)?;
    if k >= eps.len() {
        return Err(TropicalError::SeedMismatch(format!("no index at position {k}")));
    }
    if eps.frozen[k] {
        return Err(TropicalError::FrozenIndexMutation(eps.ids[k].clone()));
    }
    Ok(())
}

/// `x'_k = -x_k`, `x'_i = x_i - ε_ik [-sgn(ε_ik) x_k]_+`.
pub fn mutate_x(p: &TropicalPoint, eps: &ExchangeMatrix, k: usize) -> Result<TropicalPoint, TropicalError> {
    check(p, eps, k, Kind::X)?;
    let mut out = p.clone();
    let xk = &p.coords[k];
    for i in 0..p.len() {
        if i == k {
            out.coords[i] = -xk;
            continue;
        }
        if !p.live(i) {
            continue;
        }
        let e = eps.get(i, k);
        if e.is_zero() {
            continue;
        }
        let t = if e.is_positive() { pos(&-xk) } else { pos(xk) };
        out.coords[i] = &p.coords[i] - e * t;
    }
    Ok(out)
}

/// `a'_k = -a_k + max(Σ [ε_kj]_+ a_j, Σ [-ε_kj]_+ a_j)`.
pub fn mutate_a(p: &TropicalPoint, eps: &ExchangeMatrix, k: usize) -> Result<TropicalPoint, TropicalError> {
    check(p, eps, k, Kind::A)?;
    if p.restricted {
        return Err(TropicalError::SeedMismatch("A-points carry every coordinate".into()));
    }
    let mut plus = Q::zero();
    let mut minus = Q::zero();
    for j in 0..p.len() {
        let e = eps.get(k, j);
        if e.is_positive() {
            plus += e * &p.coords[j];
        } else if e.is_negative() {
            minus -= e * &p.coords[j];
        }
    }
    let mut out = p.clone();
    out.coords[k] = -&p.coords[k] + max(plus, minus);
    Ok(out)
}

fn permute(p: &TropicalPoint, sigma: &[usize]) -> Result<TropicalPoint, TropicalError> {
    if sigma.len() != p.len() {
        return Err(TropicalError::SeedMismatch("permutation length".into()));
    }
    let mut out = p.clone();
    for (i, &j) in sigma.iter().enumerate() {
        out.coords[j] = p.coords[i].clone();
    }
    Ok(out)
}

/// Run the steps, transporting the matrix along.
pub fn transport(
    p: &TropicalPoint,
    eps: &ExchangeMatrix,
    steps: &[MutationStep],
) -> Result<(TropicalPoint, ExchangeMatrix), TropicalError> {
    let mut p = p.clone();
    let mut m = eps.clone();
    for step in steps {
        match step {
            MutationStep::Mutate(k) => {
                p = match p.kind {
                    Kind::X => mutate_x(&p, &m, *k)?,
                    Kind::A => mutate_a(&p, &m, *k)?,
                };
                m = mutate_matrix(&m, *k)?;
            }
            MutationStep::Permute(sigma) => {
                m = sl3_seed::apply_steps(&m, std::slice::from_ref(step))?;
                p = permute(&p, sigma)?;
            }
        }
    }
    Ok((p, m))
}

/// Transport a point of either kind across the flip of `edge`.
pub fn apply_flip(
    p: &TropicalPoint,
    t: &Triangulation,
    edge: &str,
) -> Result<(TropicalPoint, Triangulation), TropicalError> {
    let (steps, t2) = flip_mutation_sequence(t, edge)?;
    let (_, eps) = exchange_matrix(t);
    let (out, _) = transport(p, &eps, &steps)?;
    Ok((out, t2))
}

/// A composite of mutation steps between two named seeds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PLMap {
    pub steps: Vec<MutationStep>,
    pub source: Option<String>,
    pub target: Option<String>,
}

impl PLMap {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(steps: Vec<MutationStep>) -> Self {
        PLMap {
            steps,
            ..Self::default()
        }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &PLMap) -> PLMap {
        PLMap {
            steps: self.steps.iter().chain(&next.steps).cloned().collect(),
            source: self.source.clone(),
            target: next.target.clone(),
        }
    }

    pub fn apply(&self, p: &TropicalPoint, eps: &ExchangeMatrix) -> Result<TropicalPoint, TropicalError> {
        Ok(transport(p, eps, &self.steps)?.0)
    }
}
