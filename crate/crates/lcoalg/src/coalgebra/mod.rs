//! Structures carrying several coproducts and the exhaustive axiom checker.

mod axioms;
mod report;

use std::collections::BTreeMap;

pub use axioms::{Axiom, Bound, CheckError, Equation, Expr, Role, RoleKind, UnknownAxiom};
pub use report::{AxiomReport, Verdict, Witness};

use crate::exactlinalg::{BasisSpace, FiniteAlgebra, Label, LinearForm, Matrix, MultiLinearMap, Scalar, TensorVec};

/// Errors from assembling an [`LStructure`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("coproduct `{0}` is defined on a different basis")]
    SpaceMismatch(String),
    #[error("`{0}` is not a map V → V⊗V")]
    NotCoproduct(String),
    #[error("counit `{0}` mentions label `{1}` outside the basis")]
    CounitLabel(String, Label),
    #[error("the algebra is defined on a different basis")]
    AlgebraSpace,
    #[error("no coproduct named `{0}`")]
    UnknownCoproduct(String),
}

/// A basis space with named coproducts, optional counits and an optional
/// multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LStructure {
    space: BasisSpace,
    coproducts: BTreeMap<String, MultiLinearMap>,
    counits: BTreeMap<String, LinearForm>,
    algebra: Option<FiniteAlgebra>,
}

impl LStructure {
    pub fn new(space: BasisSpace) -> Self {
        LStructure { space, coproducts: BTreeMap::new(), counits: BTreeMap::new(), algebra: None }
    }

    pub fn with_coproduct(mut self, name: &str, m: MultiLinearMap) -> Result<Self, StructureError> {
        self.insert_coproduct(name, m)?;
        Ok(self)
    }

    pub fn insert_coproduct(&mut self, name: &str, m: MultiLinearMap) -> Result<(), StructureError> {
        if m.space() != &self.space {
            return Err(StructureError::SpaceMismatch(name.to_string()));
        }
        if m.source_degree() != 1 || m.target_degree() != 2 {
            return Err(StructureError::NotCoproduct(name.to_string()));
        }
        self.coproducts.insert(name.to_string(), m);
        Ok(())
    }

    pub fn with_counit(mut self, name: &str, f: LinearForm) -> Result<Self, StructureError> {
        if let Some((l, _)) = f.iter().find(|(l, _)| !self.space.contains(l)) {
            return Err(StructureError::CounitLabel(name.to_string(), l.clone()));
        }
        self.counits.insert(name.to_string(), f);
        Ok(self)
    }

    pub fn with_algebra(mut self, a: FiniteAlgebra) -> Result<Self, StructureError> {
        if a.space() != &self.space {
            return Err(StructureError::AlgebraSpace);
        }
        self.algebra = Some(a);
        Ok(self)
    }

    pub fn space(&self) -> &BasisSpace {
        &self.space
    }

    pub fn coproduct(&self, name: &str) -> Option<&MultiLinearMap> {
        self.coproducts.get(name)
    }

    /// Like [`coproduct`](Self::coproduct) but with an error for missing names.
    pub fn get(&self, name: &str) -> Result<&MultiLinearMap, StructureError> {
        self.coproduct(name).ok_or_else(|| StructureError::UnknownCoproduct(name.to_string()))
    }

    pub fn coproducts(&self) -> impl Iterator<Item = (&String, &MultiLinearMap)> {
        self.coproducts.iter()
    }

    pub fn counit(&self, name: &str) -> Option<&LinearForm> {
        self.counits.get(name)
    }

    pub fn counits(&self) -> impl Iterator<Item = (&String, &LinearForm)> {
        self.counits.iter()
    }

    pub fn algebra(&self) -> Option<&FiniteAlgebra> {
        self.algebra.as_ref()
    }
}

/// Builds a role → name binding table from pairs.
pub fn bindings(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(r, n)| (r.to_string(), n.to_string())).collect()
}

/// Checks `axiom` on every basis label of `s` with the given role bindings.
pub fn check_axiom(s: &LStructure, axiom: &str, binds: &BTreeMap<String, String>) -> Result<AxiomReport, CheckError> {
    let axiom: Axiom = axiom.parse()?;
    let bound = Bound::resolve(axiom, s, binds)?;
    Ok(bound.check(axiom, s.space().labels()))
}

/// [`check_axiom`] with bindings given as pairs.
pub fn check(s: &LStructure, axiom: &str, pairs: &[(&str, &str)]) -> Result<AxiomReport, CheckError> {
    check_axiom(s, axiom, &bindings(pairs))
}

/// A basis of `ker(Δ − τΔ̃)`.
pub fn cocommutator_space(s: &LStructure, right: &str, left: &str) -> Result<Vec<TensorVec>, StructureError> {
    let d = s.get(right)?;
    let dt = s.get(left)?;
    let flipped = MultiLinearMap::twist(s.space()).compose(dt).expect("same shape");
    Ok(d.sub(&flipped).expect("same shape").kernel())
}

/// The termwise sum of two coproducts.
pub fn dichotomy_sum(s: &LStructure, a: &str, b: &str) -> Result<MultiLinearMap, StructureError> {
    Ok(s.get(a)?.add(s.get(b)?).expect("same shape"))
}

/// Which counit equation to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounitSide {
    /// `(id⊗ε)Δ = id`
    Right,
    /// `(ε⊗id)Δ = id`
    Left,
}

/// Solves the counit equation for `cop` on the labels `domain`, treating
/// the value on every basis label as an unknown. Returns `None` when no
/// counit exists; free unknowns are set to zero.
pub fn solve_counit(cop: &MultiLinearMap, side: CounitSide, domain: &[Label]) -> Option<LinearForm> {
    let space = cop.space();
    let unknowns = space.labels();
    let (keep, contract) = match side {
        CounitSide::Right => (0, 1),
        CounitSide::Left => (1, 0),
    };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for v in domain {
        let image = cop.at(v);
        for w in unknowns {
            let mut row = vec![Scalar::zero(); unknowns.len()];
            for (t, c) in image.iter() {
                if &t[keep] == w {
                    let j = space.position(&t[contract]).unwrap();
                    row[j] += c;
                }
            }
            rows.push(row);
            rhs.push(if v == w { Scalar::one() } else { Scalar::zero() });
        }
    }
    let x = Matrix::from_rows(rows).solve(&rhs)?;
    Some(LinearForm::from_values(unknowns.iter().cloned().zip(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle() -> LStructure {
        let s = BasisSpace::of(&["u", "v"]);
        let d = MultiLinearMap::coproduct(&s, [("u".into(), TensorVec::of(&[&["u", "v"]])), ("v".into(), TensorVec::of(&[&["v", "u"]]))])
            .unwrap();
        let dt = MultiLinearMap::coproduct(&s, [("u".into(), TensorVec::of(&[&["v", "u"]])), ("v".into(), TensorVec::of(&[&["u", "v"]]))])
            .unwrap();
        LStructure::new(s).with_coproduct("Delta", d).unwrap().with_coproduct("Delta_tilde", dt).unwrap()
    }

    #[test]
    fn missing_binding_and_unknown_axiom() {
        let s = two_cycle();
        assert_eq!(check(&s, "entanglement", &[("Delta", "Delta")]).unwrap_err(), CheckError::MissingBinding("Delta_tilde".into()));
        assert!(matches!(check(&s, "nope", &[]), Err(CheckError::UnknownAxiom(_))));
        assert_eq!(check(&s, "coassoc", &[("Delta", "X")]).unwrap_err(), CheckError::UnknownCoproduct("X".into()));
    }

    #[test]
    fn bidirected_two_cycle_is_cocommutative() {
        let s = two_cycle();
        let r = check(&s, "bidirected", &[("Delta", "Delta"), ("Delta_tilde", "Delta_tilde")]).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(cocommutator_space(&s, "Delta", "Delta_tilde").unwrap().len(), 2);
    }

    #[test]
    fn counit_of_group_like() {
        let s = BasisSpace::of(&["g"]);
        let d = MultiLinearMap::coproduct(&s, [("g".into(), TensorVec::of(&[&["g", "g"]]))]).unwrap();
        let e = solve_counit(&d, CounitSide::Right, s.labels()).unwrap();
        assert_eq!(e.value(&"g".into()), Scalar::one());
    }

    #[test]
    fn no_counit_for_zero_map() {
        let s = BasisSpace::of(&["g"]);
        let d = MultiLinearMap::zero(&s, 1, 2);
        assert!(solve_counit(&d, CounitSide::Left, s.labels()).is_none());
    }

    #[test]
    fn report_verdict_tracks_witnesses() {
        let s = two_cycle();
        let r = check(&s, "coassoc", &[("Delta", "Delta")]).unwrap();
        assert_eq!(r.passed(), r.witnesses().is_empty());
    }
}
