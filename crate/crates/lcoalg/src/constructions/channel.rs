//! Channel maps: invertible coalgebra morphisms between two copies inside one
//! ambient basis.

use std::collections::BTreeMap;

use crate::coalgebra::{AxiomReport, LStructure};
use crate::exactlinalg::{BasisSpace, FiniteAlgebra, Label, LinearForm, Matrix, MultiLinearMap, Tensor, TensorVec};

/// Why a proposed channel map was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChannelError {
    #[error("label `{0}` is not in the source basis")]
    UnknownSource(Label),
    #[error("image of `{0}` leaves the target basis or is not of degree one")]
    BadImage(Label),
    #[error("source has dimension {0}, target {1}")]
    Dimension(usize, usize),
    #[error("the assignment is not invertible")]
    NotInvertible,
    #[error("the two sides share no coproduct name")]
    NoSharedCoproduct,
    #[error("{}", describe(.0))]
    Verification(Box<AxiomReport>),
}

fn describe(r: &AxiomReport) -> String {
    match r.witnesses().first() {
        Some(w) => format!("not a channel: {} at {}: {} != {}", w.equation, w.at, w.lhs, w.rhs),
        None => "not a channel".into(),
    }
}

/// An invertible linear map `Φ: C1 → C2` given on basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChannelMap {
    source: BasisSpace,
    target: BasisSpace,
    forward: BTreeMap<Label, TensorVec>,
    inverse: BTreeMap<Label, TensorVec>,
}

impl ChannelMap {
    /// Builds `Φ` from its values on the source labels; unassigned labels map
    /// to zero (and so make the map singular).
    pub fn new<I>(source: BasisSpace, target: BasisSpace, assignment: I) -> Result<Self, ChannelError>
    where
        I: IntoIterator<Item = (Label, TensorVec)>,
    {
        if source.dim() != target.dim() {
            return Err(ChannelError::Dimension(source.dim(), target.dim()));
        }
        let mut forward = BTreeMap::new();
        for (l, v) in assignment {
            if !source.contains(&l) {
                return Err(ChannelError::UnknownSource(l));
            }
            if v.iter().any(|(t, _)| t.len() != 1 || !target.contains(&t[0])) {
                return Err(ChannelError::BadImage(l));
            }
            forward.insert(l, v);
        }
        let n = source.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, l) in source.labels().iter().enumerate() {
            if let Some(v) = forward.get(l) {
                for (t, c) in v.iter() {
                    m.set(target.position(&t[0]).unwrap(), i, c.clone());
                }
            }
        }
        let inv = m.inverse().ok_or(ChannelError::NotInvertible)?;
        let mut inverse = BTreeMap::new();
        for (j, y) in target.labels().iter().enumerate() {
            let terms = source.labels().iter().enumerate().map(|(i, x)| (inv.get(i, j).clone(), vec![x.clone()]));
            inverse.insert(y.clone(), TensorVec::from_terms(terms));
        }
        Ok(ChannelMap { source, target, forward, inverse })
    }

    /// A bijection of labels, `(source, target)` pairs in order; the target
    /// basis follows the pair order.
    pub fn renaming(pairs: &[(&str, &str)]) -> Result<Self, ChannelError> {
        let source = BasisSpace::new(pairs.iter().map(|(s, _)| Label::new(s)).collect()).map_err(|_| ChannelError::NotInvertible)?;
        let target = BasisSpace::new(pairs.iter().map(|(_, t)| Label::new(t)).collect()).map_err(|_| ChannelError::NotInvertible)?;
        let assignment = pairs.iter().map(|(s, t)| (Label::new(s), TensorVec::label(&Label::new(t))));
        ChannelMap::new(source, target, assignment)
    }

    pub fn source(&self) -> &BasisSpace {
        &self.source
    }

    pub fn target(&self) -> &BasisSpace {
        &self.target
    }

    /// `Φ(l)`, zero outside the source.
    pub fn forward(&self, l: &Label) -> TensorVec {
        self.forward.get(l).cloned().unwrap_or_default()
    }

    /// `Φ⁻¹(l)`, zero outside the target.
    pub fn inverse(&self, l: &Label) -> TensorVec {
        self.inverse.get(l).cloned().unwrap_or_default()
    }

    /// Source labels whose image is themselves.
    pub fn fixed_labels(&self) -> Vec<Label> {
        self.source.labels().iter().filter(|l| self.forward(l) == TensorVec::label(l)).cloned().collect()
    }

    /// Whether source and target share no label.
    pub fn is_disjoint(&self) -> bool {
        self.source.labels().iter().all(|l| !self.target.contains(l))
    }

    /// `Φ^{⊗k}` on a vector whose factors all lie in the source.
    pub fn push(&self, v: &TensorVec) -> TensorVec {
        v.map_factors(|l| self.forward(l))
    }

    /// `(Φ⁻¹)^{⊗k}`.
    pub fn pull(&self, v: &TensorVec) -> TensorVec {
        v.map_factors(|l| self.inverse(l))
    }

    /// `Φ` on factor `slot` only.
    pub fn push_at(&self, v: &TensorVec, slot: usize) -> TensorVec {
        map_slot(v, slot, |l| self.forward(l))
    }

    /// `Φ⁻¹` on factor `slot` only.
    pub fn pull_at(&self, v: &TensorVec, slot: usize) -> TensorVec {
        map_slot(v, slot, |l| self.inverse(l))
    }

    /// `Φ` as a linear map on `space` (zero off the source).
    pub fn forward_map(&self, space: &BasisSpace) -> MultiLinearMap {
        let rows = self.source.labels().iter().map(|l| (l.clone(), self.forward(l)));
        MultiLinearMap::linear(space, rows).expect("channel labels lie in the ambient space")
    }

    /// `Φ⁻¹` as a linear map on `space`.
    pub fn inverse_map(&self, space: &BasisSpace) -> MultiLinearMap {
        let rows = self.target.labels().iter().map(|l| (l.clone(), self.inverse(l)));
        MultiLinearMap::linear(space, rows).expect("channel labels lie in the ambient space")
    }

    /// `(Φ⊗Φ)ΔΦ⁻¹` on the target basis.
    pub fn transport(&self, d: &MultiLinearMap) -> MultiLinearMap {
        let rows = self.target.labels().iter().map(|y| (y.clone(), self.push(&d.apply(&self.inverse(y)))));
        MultiLinearMap::coproduct(&self.target, rows).expect("images lie in the target")
    }

    /// `εΦ⁻¹`.
    pub fn transport_counit(&self, e: &LinearForm) -> LinearForm {
        LinearForm::from_values(self.target.labels().iter().map(|y| (y.clone(), e.eval(&self.inverse(y)))))
    }

    /// The product `Φ(x)Φ(y) := Φ(xy)` on the target.
    pub fn transport_algebra(&self, a: &FiniteAlgebra) -> FiniteAlgebra {
        let ts = self.target.labels();
        let mut rows = Vec::new();
        for x in ts {
            for y in ts {
                let p = a.mul(&self.inverse(x), &self.inverse(y));
                rows.push(((x.clone(), y.clone()), self.push(&p)));
            }
        }
        FiniteAlgebra::new(self.target.clone(), rows, self.push(a.unit())).expect("isomorphic image")
    }

    /// The copy of `s` on the target basis with every coproduct, counit and
    /// product moved across by `Φ`.
    pub fn transport_structure(&self, s: &LStructure) -> LStructure {
        let mut out = LStructure::new(self.target.clone());
        for (name, d) in s.coproducts() {
            out.insert_coproduct(name, self.transport(d)).expect("target coproduct");
        }
        for (name, e) in s.counits() {
            out = out.with_counit(name, self.transport_counit(e)).expect("target labels");
        }
        if let Some(a) = s.algebra() {
            out = out.with_algebra(self.transport_algebra(a)).expect("target basis");
        }
        out
    }

    /// Evaluates the channel conditions against the two sides: `Δ₂Φ = (Φ⊗Φ)Δ₁`
    /// for every shared coproduct name, `ε₂Φ = ε₁` for shared counits, and
    /// multiplicativity and unitality when both sides carry products.
    pub fn verify(&self, c1: &LStructure, c2: &LStructure) -> AxiomReport {
        let mut r = AxiomReport::new("channel");
        for (name, d1) in c1.coproducts() {
            let Some(d2) = c2.coproduct(name) else { continue };
            let eq = format!("{name}Φ = (Φ⊗Φ){name}");
            for l in self.source.labels() {
                r.record(&eq, l, &d2.apply(&self.forward(l)), &self.push(&d1.at(l)));
            }
        }
        for (name, e1) in c1.counits() {
            let Some(e2) = c2.counit(name) else { continue };
            let eq = format!("{name}Φ = {name}");
            for l in self.source.labels() {
                r.record(&eq, l, &e2.eval(&self.forward(l)), &e1.value(l));
            }
        }
        if let (Some(a1), Some(a2)) = (c1.algebra(), c2.algebra()) {
            let ls = self.source.labels();
            for x in ls {
                for y in ls {
                    let lhs = self.push(&a1.mul_labels(x, y));
                    let rhs = a2.mul(&self.forward(x), &self.forward(y));
                    r.record("Φ(xy) = Φ(x)Φ(y)", format!("{x},{y}"), &lhs, &rhs);
                }
            }
            r.record("Φ(1) = 1", "1", &self.push(a1.unit()), a2.unit());
        }
        r
    }
}

/// Builds and verifies a channel between two structures. At least one
/// coproduct name must be shared.
pub fn channel_map<I>(c1: &LStructure, c2: &LStructure, assignment: I) -> Result<ChannelMap, ChannelError>
where
    I: IntoIterator<Item = (Label, TensorVec)>,
{
    let phi = ChannelMap::new(c1.space().clone(), c2.space().clone(), assignment)?;
    if !c1.coproducts().any(|(n, _)| c2.coproduct(n).is_some()) {
        return Err(ChannelError::NoSharedCoproduct);
    }
    let r = phi.verify(c1, c2);
    if !r.passed() {
        return Err(ChannelError::Verification(Box::new(r)));
    }
    Ok(phi)
}

/// Applies `f` to tensor factor `slot`, expanding linearly.
pub fn map_slot<F: Fn(&Label) -> TensorVec>(v: &TensorVec, slot: usize, f: F) -> TensorVec {
    let mut out = TensorVec::zero();
    for (t, c) in v.iter() {
        for (img, d) in f(&t[slot]).iter() {
            let mut nt: Tensor = t.clone();
            nt.splice(slot..=slot, img.iter().cloned());
            out.add_term(nt, &(c * d));
        }
    }
    out
}
