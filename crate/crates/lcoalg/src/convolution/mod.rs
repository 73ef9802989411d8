//! Convolution products on linear functionals, the Leibniz bracket and the
//! dual verification suite.

mod suite;

use std::collections::BTreeMap;
use std::fmt;

pub use suite::{
    bar_unit, check_associative, check_bar_unit, check_dual_axiom, check_leibniz_poisson, structure_constants, BarUnit, StructureConstants,
};

use crate::coalgebra::StructureError;
use crate::constructions::EntangledStructure;
use crate::exactlinalg::{BasisSpace, FiniteAlgebra, Label, MultiLinearMap, Scalar, TensorVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConvolutionError {
    #[error("functionals live on different bases")]
    DomainMismatch,
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("no counit exists on the first component")]
    NoCounit,
    #[error("cannot dualise `{0}`")]
    Unsupported(String),
}

/// A linear map `V → A` given by its values on basis labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Functional {
    space: BasisSpace,
    values: BTreeMap<Label, TensorVec>,
}

impl Functional {
    pub fn zero(space: &BasisSpace) -> Self {
        Functional { space: space.clone(), values: BTreeMap::new() }
    }

    /// Values in `A`, as degree-one vectors over the algebra basis.
    pub fn new<I>(space: &BasisSpace, values: I) -> Self
    where
        I: IntoIterator<Item = (Label, TensorVec)>,
    {
        let mut f = Functional::zero(space);
        for (l, v) in values {
            f.set(l, v);
        }
        f
    }

    /// A scalar-valued functional (values in the one-dimensional algebra).
    pub fn scalar<I>(space: &BasisSpace, values: I) -> Self
    where
        I: IntoIterator<Item = (Label, Scalar)>,
    {
        let one = FiniteAlgebra::scalars().unit().clone();
        Functional::new(space, values.into_iter().map(|(l, c)| (l, one.scale(&c))))
    }

    /// The dual basis functional `l*` with value `unit` on `l`.
    pub fn dual(space: &BasisSpace, l: &Label, unit: &TensorVec) -> Self {
        Functional::new(space, [(l.clone(), unit.clone())])
    }

    fn set(&mut self, l: Label, v: TensorVec) {
        if v.is_zero() {
            self.values.remove(&l);
        } else {
            self.values.insert(l, v);
        }
    }

    pub fn space(&self) -> &BasisSpace {
        &self.space
    }

    pub fn value(&self, l: &Label) -> TensorVec {
        self.values.get(l).cloned().unwrap_or_default()
    }

    /// The coefficient of the algebra unit `1` in the value at `l`.
    pub fn scalar_value(&self, l: &Label) -> Scalar {
        self.value(l).coeff(&[Label::new("1")])
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Label, &TensorVec)> {
        self.values.iter()
    }

    pub fn add_scaled(&self, other: &Functional, c: &Scalar) -> Functional {
        let mut out = self.clone();
        for (l, v) in &other.values {
            let mut w = out.value(l);
            w.add_scaled(v, c);
            out.set(l.clone(), w);
        }
        out
    }

    pub fn add(&self, other: &Functional) -> Functional {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &Functional) -> Functional {
        self.add_scaled(other, &-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        Functional::zero(&self.space).add_scaled(self, c)
    }

    /// Evaluates on a degree-one vector.
    pub fn eval(&self, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for (t, c) in v.iter() {
            out.add_scaled(&self.value(&t[0]), c);
        }
        out
    }
}

impl fmt::Display for Functional {
    /// Scalar-valued functionals print as `x* - u*`; other values are
    /// written `(value)·l*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        let unit = [Label::new("1")];
        let mut first = true;
        for (l, v) in &self.values {
            let scalar = v.len() == 1 && v.iter().next().is_some_and(|(t, _)| t.as_slice() == unit);
            if scalar {
                let c = v.coeff(&unit);
                let neg = c.is_negative_form() && !c.is_compound();
                let mag = if neg { -&c } else { c.clone() };
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                if !mag.is_one() {
                    if mag.is_compound() {
                        write!(f, "({mag})")?;
                    } else {
                        write!(f, "{mag}")?;
                    }
                }
                write!(f, "{l}*")?;
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({v})·{l}*")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `(f·g)(v) = Σ λ f(v₁)g(v₂)` over the terms `λ v₁⊗v₂` of `cop(v)`.
pub fn conv_product(f: &Functional, g: &Functional, cop: &MultiLinearMap, a: &FiniteAlgebra) -> Result<Functional, ConvolutionError> {
    if f.space() != g.space() || f.space() != cop.space() {
        return Err(ConvolutionError::DomainMismatch);
    }
    let mut out = Functional::zero(f.space());
    for l in f.space().labels() {
        let mut acc = TensorVec::zero();
        for (t, c) in cop.at(l).iter() {
            let (x, y) = (f.value(&t[0]), g.value(&t[1]));
            if x.is_zero() || y.is_zero() {
                continue;
            }
            acc.add_scaled(&a.mul(&x, &y), c);
        }
        out.set(l.clone(), acc);
    }
    Ok(out)
}

/// The three products `⊥` (over `Δ*`), `⊣` (over `δ̂1`) and `⊢` (over `δ1`)
/// of an entangled structure, valued in an algebra `A`.
#[derive(Clone, Debug)]
pub struct Convolution {
    space: BasisSpace,
    perp: MultiLinearMap,
    dashv: MultiLinearMap,
    vdash: MultiLinearMap,
    algebra: FiniteAlgebra,
}

impl Convolution {
    /// Scalar-valued products over `Delta_star`, `delta1_hat` and `delta1`.
    pub fn new(e: &EntangledStructure) -> Result<Self, ConvolutionError> {
        Convolution::with_names(e, e.glued_name(), "delta1_hat", "delta1", FiniteAlgebra::scalars())
    }

    pub fn with_names(
        e: &EntangledStructure,
        perp: &str,
        dashv: &str,
        vdash: &str,
        algebra: FiniteAlgebra,
    ) -> Result<Self, ConvolutionError> {
        Ok(Convolution {
            space: e.space().clone(),
            perp: e.get(perp)?.clone(),
            dashv: e.get(dashv)?.clone(),
            vdash: e.get(vdash)?.clone(),
            algebra,
        })
    }

    pub fn space(&self) -> &BasisSpace {
        &self.space
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// The coproduct behind `⊥`, `⊣` or `⊢`.
    pub fn coproduct(&self, op: Op) -> &MultiLinearMap {
        match op {
            Op::Perp => &self.perp,
            Op::Dashv => &self.dashv,
            Op::Vdash => &self.vdash,
        }
    }

    pub fn product(&self, op: Op, f: &Functional, g: &Functional) -> Functional {
        conv_product(f, g, self.coproduct(op), &self.algebra).expect("functionals on the ambient basis")
    }

    pub fn perp(&self, f: &Functional, g: &Functional) -> Functional {
        self.product(Op::Perp, f, g)
    }

    pub fn dashv(&self, f: &Functional, g: &Functional) -> Functional {
        self.product(Op::Dashv, f, g)
    }

    pub fn vdash(&self, f: &Functional, g: &Functional) -> Functional {
        self.product(Op::Vdash, f, g)
    }

    /// `[f,g] = f⊣g − g⊢f`.
    pub fn bracket(&self, f: &Functional, g: &Functional) -> Functional {
        self.dashv(f, g).sub(&self.vdash(g, f))
    }

    /// The dual basis functional of `l`.
    pub fn dual(&self, l: &Label) -> Functional {
        Functional::dual(&self.space, l, self.algebra.unit())
    }

    /// Dual functionals of every ambient label, in basis order.
    pub fn duals(&self) -> Vec<Functional> {
        self.space.labels().iter().map(|l| self.dual(l)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Perp,
    Dashv,
    Vdash,
}

/// `[f,g] = f⊣g − g⊢f` on a self-entanglement, scalar-valued.
pub fn bracket(f: &Functional, g: &Functional, e: &EntangledStructure) -> Result<Functional, ConvolutionError> {
    if f.space() != e.space() || g.space() != e.space() {
        return Err(ConvolutionError::DomainMismatch);
    }
    Ok(Convolution::new(e)?.bracket(f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn star(c: &Convolution, name: &str) -> Functional {
        c.dual(&Label::new(name))
    }

    #[test]
    fn a_perp_b_is_b() {
        let e = fixtures::f_entangled();
        let c = Convolution::new(&e).unwrap();
        let ab = c.perp(&star(&c, "a"), &star(&c, "b"));
        assert_eq!(ab, star(&c, "b"));
        assert_eq!(ab.scalar_value(&"b".into()), Scalar::one());
    }

    #[test]
    fn product_with_zero() {
        let e = fixtures::f_entangled();
        let c = Convolution::new(&e).unwrap();
        assert!(c.perp(&star(&c, "a"), &Functional::zero(e.space())).is_zero());
    }

    #[test]
    fn display_of_combination() {
        let e = fixtures::f_entangled();
        let c = Convolution::new(&e).unwrap();
        let f = star(&c, "x").sub(&star(&c, "u"));
        assert_eq!(f.to_string(), "-u* + x*");
        assert_eq!(Functional::zero(e.space()).to_string(), "0");
        assert_eq!(star(&c, "b").scale(&Scalar::from_int(-2)).to_string(), "-2b*");
    }

    #[test]
    fn domain_mismatch() {
        let e = fixtures::f_entangled();
        let other = Functional::zero(&BasisSpace::of(&["a"]));
        let c = Convolution::new(&e).unwrap();
        assert_eq!(bracket(&other, &star(&c, "a"), &e).unwrap_err(), ConvolutionError::DomainMismatch);
    }
}
