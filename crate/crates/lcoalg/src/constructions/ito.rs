//! Ito pairs `d→ = Δ* − δ`, `d← = Δ* − δ̂`, the Leibniz coderivative
//! `Φ − id` and algebra-level checks on bridges.

use super::{ConstructionError, EntangledStructure};
use crate::coalgebra::{self, AxiomReport};
use crate::exactlinalg::{FiniteAlgebra, Label, MultiLinearMap, Scalar, TensorVec};

/// `d→ = Δ − δ` and `d← = Δ' − δ̂`, remembering which coproducts they came
/// from.
#[derive(Clone, Debug)]
pub struct ItoPair {
    pub right: MultiLinearMap,
    pub left: MultiLinearMap,
    /// `(glued, bridge)` for `d→`.
    pub right_from: (String, String),
    /// `(glued, bridge)` for `d←`.
    pub left_from: (String, String),
}

/// The Ito pair built from the glued coproduct and the bridges `delta`,
/// `delta_hat`.
pub fn ito_pair(e: &EntangledStructure, delta: &str, delta_hat: &str) -> Result<ItoPair, ConstructionError> {
    let g = e.glued_name().to_string();
    ito_pair_with(e, (&g, delta), (&g, delta_hat))
}

/// The Ito pair with `d→ = right.0 − right.1` and `d← = left.0 − left.1`.
pub fn ito_pair_with(e: &EntangledStructure, right: (&str, &str), left: (&str, &str)) -> Result<ItoPair, ConstructionError> {
    let d_right = e.get(right.0)?.sub(e.get(right.1)?).expect("same shape");
    let d_left = e.get(left.0)?.sub(e.get(left.1)?).expect("same shape");
    Ok(ItoPair { right: d_right, left: d_left, right_from: (right.0.into(), right.1.into()), left_from: (left.0.into(), left.1.into()) })
}

impl ItoPair {
    /// The three identities `(id⊗d←)d→ = (d→⊗id)d←`, `(d→⊗id)Δ = (id⊗Δ)d→`
    /// and `(id⊗d←)Δ' = (Δ'⊗id)d←` on every ambient label.
    pub fn check(&self, e: &EntangledStructure) -> Result<AxiomReport, ConstructionError> {
        let mut s = e.structure().clone();
        s.insert_coproduct("d_right", self.right.clone())?;
        s.insert_coproduct("d_left", self.left.clone())?;
        let mut r = AxiomReport::new("ito_pair");
        let glued_r = self.right_from.0.as_str();
        let glued_l = self.left_from.0.as_str();
        for (tilde, plain) in [("d_right", "d_left"), ("d_right", glued_r), (glued_l, "d_left")] {
            r.absorb(coalgebra::check(&s, "entanglement", &[("Delta_tilde", tilde), ("Delta", plain)])?);
        }
        Ok(r)
    }

    /// `d→ + δ = Δ` and `d← + δ̂ = Δ'` termwise.
    pub fn check_split(&self, e: &EntangledStructure) -> Result<AxiomReport, ConstructionError> {
        let mut r = AxiomReport::new("ito_split");
        for (d, (g, b)) in [(&self.right, &self.right_from), (&self.left, &self.left_from)] {
            let sum = d.add(e.get(b)?).expect("same shape");
            let glued = e.get(g)?;
            for l in e.space().labels() {
                r.record(&format!("d + {b} = {g}"), l, &sum.at(l), &glued.at(l));
            }
        }
        Ok(r)
    }
}

/// The Ito property of `d` relative to the comodule map `c`: `d(1) = 0` and
/// `d(xy) = d(x)d(y) + d(x)c(y) + c(x)d(y)` for all `x, y` in `labels`, with
/// products taken factorwise in `A⊗A`.
pub fn ito_property(d: &MultiLinearMap, c: &MultiLinearMap, a: &FiniteAlgebra, labels: &[Label]) -> AxiomReport {
    let mut r = AxiomReport::new("ito");
    r.record("d(1) = 0", "1", &d.apply(a.unit()), &TensorVec::zero());
    for x in labels {
        let (dx, cx) = (d.at(x), c.at(x));
        for y in labels {
            let (dy, cy) = (d.at(y), c.at(y));
            let lhs = d.apply(&a.mul_labels(x, y));
            let mut rhs = a.mul_tensor(&dx, &dy);
            rhs.add_scaled(&a.mul_tensor(&dx, &cy), &Scalar::one());
            rhs.add_scaled(&a.mul_tensor(&cx, &dy), &Scalar::one());
            r.record("d(xy) = d(x)d(y) + d(x)c(y) + c(x)d(y)", format!("{x},{y}"), &lhs, &rhs);
        }
    }
    r
}

/// Multiplicativity `δ(xy) = δ(x)δ(y)` on all ambient label pairs and
/// unitality `δ(1) = 1⊗1` for each named coproduct.
pub fn bridge_homomorphism(e: &EntangledStructure, names: &[&str]) -> Result<AxiomReport, ConstructionError> {
    let a = e.algebra().ok_or(ConstructionError::NoAlgebra)?;
    let mut r = AxiomReport::new("bridge_homomorphism");
    let ls = e.space().labels();
    for name in names {
        let d = e.get(name)?;
        r.record(&format!("{name}(1) = 1⊗1"), "1", &d.apply(a.unit()), &a.unit_tensor(2));
        for x in ls {
            for y in ls {
                let lhs = d.apply(&a.mul_labels(x, y));
                let rhs = a.mul_tensor(&d.at(x), &d.at(y));
                r.record(&format!("{name}(xy) = {name}(x){name}(y)"), format!("{x},{y}"), &lhs, &rhs);
            }
        }
    }
    Ok(r)
}

/// `D_I = Φ − id` on C1 with its verification.
#[derive(Clone, Debug)]
pub struct Coderivative {
    pub map: MultiLinearMap,
    pub report: AxiomReport,
}

/// Builds `D_I = Φ − id` on the C1 labels of a self-entanglement and checks
/// `(δ1+δ̂1)D_I = (D_I⊗id)Δ₁ + (id⊗D_I)Δ₁` on each of them. With an attached
/// algebra it also checks `D_I(1) = 0` and
/// `D_I(xy) − D_I(x)D_I(y) = xD_I(y) + D_I(x)y` on C1 pairs.
pub fn leibniz_coderivative(e: &EntangledStructure) -> Result<Coderivative, ConstructionError> {
    let space = e.space();
    let phi = e.channel();
    let c1 = e.c1().labels();
    let rows = c1.iter().map(|l| (l.clone(), &phi.forward(l) - &TensorVec::label(l)));
    let di = MultiLinearMap::linear(space, rows).expect("ambient labels");
    let bridges = e.get("delta1")?.add(e.get("delta1_hat")?).expect("same shape");
    let glued = e.glued();
    let mut r = AxiomReport::new("leibniz_coderivative");
    for l in c1 {
        let lhs = bridges.apply(&di.at(l));
        let d = glued.at(l);
        let mut rhs = di.apply_at(&d, 0);
        rhs.add_scaled(&di.apply_at(&d, 1), &Scalar::one());
        r.record("(δ1+δ̂1)D = (D⊗id)Δ + (id⊗D)Δ", l, &lhs, &rhs);
    }
    if let Some(a) = e.algebra() {
        r.record("D(1) = 0", "1", &di.apply(a.unit()), &TensorVec::zero());
        for x in c1 {
            for y in c1 {
                let (dx, dy) = (di.at(x), di.at(y));
                let (ex, ey) = (TensorVec::label(x), TensorVec::label(y));
                let lhs = &di.apply(&a.mul_labels(x, y)) - &a.mul(&dx, &dy);
                let rhs = &a.mul(&ex, &dy) + &a.mul(&dx, &ey);
                r.record("D(xy) − D(x)D(y) = xD(y) + D(x)y", format!("{x},{y}"), &lhs, &rhs);
            }
        }
    }
    Ok(Coderivative { map: di, report: r })
}
