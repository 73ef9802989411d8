//! The codialgebra and dendriform coalgebra on `span{a_i} ⊕ span{x_i}` built
//! from the path coalgebra `Δ(a_i) = Σ_{j+k=i} a_j⊗a_k`.

use super::{channel_map, glue, ChannelMap, ConstructionError};
use crate::coalgebra::LStructure;
use crate::exactlinalg::{BasisSpace, Label, LinearForm, Scalar, TensorVec};

/// How `j + k = i` is read on indices `0 … n−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indexing {
    /// `j + k = i` as integers, so only `j, k ≤ i` contribute.
    Truncated,
    /// `j + k ≡ i (mod n)`.
    Cyclic,
}

impl Indexing {
    fn pairs(self, n: usize, i: usize) -> Vec<(usize, usize)> {
        match self {
            Indexing::Truncated => (0..=i).map(|j| (j, i - j)).collect(),
            Indexing::Cyclic => (0..n).map(|j| (j, (i + n - j) % n)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CibilsStructures {
    /// `delta`, `delta_hat`, `Delta` (on the `a_i` only), `Delta_star` and
    /// the counit `eps` (`a₀ ↦ 1`).
    pub codialgebra: LStructure,
    /// `delta`, `delta_hat` with `delta_hat(a_i) = 0`.
    pub dendriform: LStructure,
    /// `Φ(a_i) = q^{−i}x_i` when it passes the channel conditions between
    /// `(span{a_i}, Δ)` and `(span{x_i}, Δ_star)`.
    pub channel: Option<ChannelMap>,
}

fn a(i: usize) -> Label {
    Label::from(format!("a{i}"))
}

fn x(i: usize) -> Label {
    Label::from(format!("x{i}"))
}

/// Builds both structures on `a0 … a{n−1}, x0 … x{n−1}`.
pub fn cibils_structures(n: usize, q: &Scalar, indexing: Indexing) -> Result<CibilsStructures, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyIndex);
    }
    if q.is_zero() {
        return Err(ConstructionError::ZeroParameter);
    }
    let avs: Vec<Label> = (0..n).map(a).collect();
    let xvs: Vec<Label> = (0..n).map(x).collect();
    let space = BasisSpace::new(avs.iter().chain(&xvs).cloned().collect()).expect("distinct labels");
    let sum = |i: usize, f: &dyn Fn(usize, usize) -> (Scalar, Vec<Label>)| {
        TensorVec::from_terms(indexing.pairs(n, i).into_iter().map(|(j, k)| f(j, k)))
    };
    let qk = |k: usize| q.pow(k as i64).expect("q ≠ 0");
    let one = Scalar::one;
    let delta_a: Vec<(Label, TensorVec)> = (0..n).map(|i| (a(i), sum(i, &|j, k| (one(), vec![a(j), a(k)])))).collect();
    let left_x: Vec<(Label, TensorVec)> = (0..n).map(|i| (x(i), sum(i, &|j, k| (one(), vec![a(j), x(k)])))).collect();
    let right_x: Vec<(Label, TensorVec)> = (0..n).map(|i| (x(i), sum(i, &|j, k| (qk(k), vec![x(j), a(k)])))).collect();
    let star_x: Vec<(Label, TensorVec)> = (0..n).map(|i| (x(i), sum(i, &|j, k| (one(), vec![x(j), x(k)])))).collect();

    let delta = glue(&space, delta_a.iter().chain(&left_x).cloned());
    let codi_hat = glue(&space, delta_a.iter().chain(&right_x).cloned());
    let dend_hat = glue(&space, right_x.iter().cloned());
    let eps = LinearForm::from_values([(a(0), one())]);
    let codialgebra = LStructure::new(space.clone())
        .with_coproduct("delta", delta.clone())?
        .with_coproduct("delta_hat", codi_hat)?
        .with_coproduct("Delta", glue(&space, delta_a.iter().cloned()))?
        .with_coproduct("Delta_star", glue(&space, delta_a.iter().chain(&star_x).cloned()))?
        .with_counit("eps", eps)?;
    let dendriform = LStructure::new(space).with_coproduct("delta", delta)?.with_coproduct("delta_hat", dend_hat)?;

    let c1_space = BasisSpace::new(avs.clone()).unwrap();
    let c2_space = BasisSpace::new(xvs.clone()).unwrap();
    let c1 = LStructure::new(c1_space.clone()).with_coproduct("Delta", glue(&c1_space, delta_a.iter().cloned()))?;
    let c2 = LStructure::new(c2_space.clone()).with_coproduct("Delta", glue(&c2_space, star_x.iter().cloned()))?;
    let assignment = (0..n).map(|i| (a(i), TensorVec::label(&x(i)).scale(&q.pow(-(i as i64)).expect("q ≠ 0"))));
    let channel = channel_map(&c1, &c2, assignment).ok();
    Ok(CibilsStructures { codialgebra, dendriform, channel })
}
