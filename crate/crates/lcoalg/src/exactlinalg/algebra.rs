//! Finite-dimensional associative unital algebras given by a multiplication
//! table on basis labels.

use std::collections::BTreeMap;

use super::{BasisSpace, Label, Scalar, Tensor, TensorVec};

/// Errors raised while validating a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("label `{0}` is not in the algebra's basis")]
    UnknownLabel(Label),
    #[error("product values must be degree-one vectors")]
    Degree,
    #[error("product is not associative on ({0}, {1}, {2})")]
    NotAssociative(Label, Label, Label),
    #[error("unit fails on `{0}`")]
    Unit(Label),
}

/// An associative algebra with unit, validated exhaustively at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAlgebra {
    space: BasisSpace,
    product: BTreeMap<(Label, Label), TensorVec>,
    unit: TensorVec,
}

impl FiniteAlgebra {
    pub fn new<I>(space: BasisSpace, product: I, unit: TensorVec) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = ((Label, Label), TensorVec)>,
    {
        let mut table = BTreeMap::new();
        for ((x, y), v) in product {
            for l in [&x, &y] {
                if !space.contains(l) {
                    return Err(AlgebraError::UnknownLabel(l.clone()));
                }
            }
            check_vector(&space, &v)?;
            if !v.is_zero() {
                table.insert((x, y), v);
            }
        }
        check_vector(&space, &unit)?;
        let alg = FiniteAlgebra { space, product: table, unit };
        alg.validate()?;
        Ok(alg)
    }

    /// The ground field as a one-dimensional algebra spanned by `1`.
    pub fn scalars() -> Self {
        let one = Label::new("1");
        let space = BasisSpace::new(vec![one.clone()]).unwrap();
        let unit = TensorVec::label(&one);
        FiniteAlgebra::new(space, [((one.clone(), one), unit.clone())], unit).unwrap()
    }

    /// The group algebra of a finite group with elements `names`, product
    /// `op` on indices and identity at index `identity`.
    pub fn group<F>(names: &[Label], op: F, identity: usize) -> Result<Self, AlgebraError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let space = BasisSpace::new(names.to_vec()).map_err(|_| AlgebraError::Degree)?;
        let mut rows = Vec::new();
        for i in 0..names.len() {
            for j in 0..names.len() {
                rows.push(((names[i].clone(), names[j].clone()), TensorVec::label(&names[op(i, j)])));
            }
        }
        FiniteAlgebra::new(space, rows, TensorVec::label(&names[identity]))
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let ls = self.space.labels();
        for x in ls {
            let ex = TensorVec::label(x);
            if self.mul(&self.unit, &ex) != ex || self.mul(&ex, &self.unit) != ex {
                return Err(AlgebraError::Unit(x.clone()));
            }
        }
        for x in ls {
            for y in ls {
                let xy = self.mul_labels(x, y);
                for z in ls {
                    let left = self.mul(&xy, &TensorVec::label(z));
                    let right = self.mul(&TensorVec::label(x), &self.mul_labels(y, z));
                    if left != right {
                        return Err(AlgebraError::NotAssociative(x.clone(), y.clone(), z.clone()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> &BasisSpace {
        &self.space
    }

    pub fn unit(&self) -> &TensorVec {
        &self.unit
    }

    pub fn rows(&self) -> impl Iterator<Item = (&(Label, Label), &TensorVec)> {
        self.product.iter()
    }

    /// Product of two basis elements.
    pub fn mul_labels(&self, x: &Label, y: &Label) -> TensorVec {
        self.product.get(&(x.clone(), y.clone())).cloned().unwrap_or_default()
    }

    /// Product of two degree-one vectors.
    pub fn mul(&self, u: &TensorVec, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for (s, a) in u.iter() {
            for (t, b) in v.iter() {
                if let Some(p) = self.product.get(&(s[0].clone(), t[0].clone())) {
                    out.add_scaled(p, &(a * b));
                }
            }
        }
        out
    }

    /// Componentwise product in `A^{⊗k}`: `(x₁⊗…⊗xₖ)(y₁⊗…⊗yₖ) = x₁y₁⊗…⊗xₖyₖ`.
    pub fn mul_tensor(&self, u: &TensorVec, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for (s, a) in u.iter() {
            for (t, b) in v.iter() {
                assert_eq!(s.len(), t.len(), "componentwise product needs equal degrees");
                let mut acc = TensorVec::basis(Tensor::new()).scale(&(a * b));
                for (x, y) in s.iter().zip(t) {
                    acc = acc.tensor(&self.mul_labels(x, y));
                    if acc.is_zero() {
                        break;
                    }
                }
                out.add_scaled(&acc, &Scalar::one());
            }
        }
        out
    }

    /// The unit in `A^{⊗k}`.
    pub fn unit_tensor(&self, k: usize) -> TensorVec {
        let mut acc = TensorVec::basis(Tensor::new());
        for _ in 0..k {
            acc = acc.tensor(&self.unit);
        }
        acc
    }
}

fn check_vector(space: &BasisSpace, v: &TensorVec) -> Result<(), AlgebraError> {
    for (t, _) in v.iter() {
        if t.len() != 1 {
            return Err(AlgebraError::Degree);
        }
        if !space.contains(&t[0]) {
            return Err(AlgebraError::UnknownLabel(t[0].clone()));
        }
    }
    Ok(())
}
