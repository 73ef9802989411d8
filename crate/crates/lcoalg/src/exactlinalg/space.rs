//! Named bases, tensors of basis labels and sparse vectors in tensor powers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::Scalar;

/// The name of a basis element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(name: &str) -> Self {
        Label(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::new(s)
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(Arc::from(s))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shorthand for building labels from string slices.
pub fn labels(names: &[&str]) -> Vec<Label> {
    names.iter().map(|n| Label::new(n)).collect()
}

/// A pure tensor `l₁⊗…⊗lₖ` of basis labels.
pub type Tensor = Vec<Label>;

/// Errors about spaces and vectors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(Label),
    #[error("a basis space needs at least one label")]
    Empty,
    #[error("label `{0}` is not in the basis")]
    UnknownLabel(Label),
}

/// An ordered list of distinct basis labels.
#[derive(Clone, PartialEq, Eq)]
pub struct BasisSpace {
    labels: Vec<Label>,
    index: BTreeMap<Label, usize>,
}

impl BasisSpace {
    pub fn new(labels: Vec<Label>) -> Result<Self, SpaceError> {
        if labels.is_empty() {
            return Err(SpaceError::Empty);
        }
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(SpaceError::DuplicateLabel(l.clone()));
            }
        }
        Ok(BasisSpace { labels, index })
    }

    /// Convenience constructor; panics on invalid input.
    pub fn of(names: &[&str]) -> Self {
        BasisSpace::new(labels(names)).expect("valid basis")
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.index.contains_key(l)
    }

    pub fn position(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn label(&self, name: &str) -> Result<Label, SpaceError> {
        let l = Label::new(name);
        if self.contains(&l) {
            Ok(l)
        } else {
            Err(SpaceError::UnknownLabel(l))
        }
    }

    /// All basis tensors of the given degree, in lexicographic basis order.
    pub fn tensors(&self, degree: usize) -> Vec<Tensor> {
        let mut out: Vec<Tensor> = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = Vec::with_capacity(out.len() * self.dim());
            for t in &out {
                for l in &self.labels {
                    let mut t2 = t.clone();
                    t2.push(l.clone());
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    /// The union of two spaces, keeping the order of `self` first.
    pub fn union(&self, other: &BasisSpace) -> BasisSpace {
        let mut ls = self.labels.clone();
        for l in &other.labels {
            if !self.contains(l) {
                ls.push(l.clone());
            }
        }
        BasisSpace::new(ls).unwrap()
    }
}

impl fmt::Debug for BasisSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.labels).finish()
    }
}

/// A finite linear combination of pure tensors; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct TensorVec {
    terms: BTreeMap<Tensor, Scalar>,
}

impl TensorVec {
    pub fn zero() -> Self {
        TensorVec::default()
    }

    /// The pure tensor `t` with coefficient one.
    pub fn basis(t: Tensor) -> Self {
        let mut v = TensorVec::zero();
        v.add_term(t, &Scalar::one());
        v
    }

    /// A degree-one basis vector.
    pub fn label(l: &Label) -> Self {
        TensorVec::basis(vec![l.clone()])
    }

    /// Builds a vector from `(coefficient, tensor)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Scalar, Tensor)>>(terms: I) -> Self {
        let mut v = TensorVec::zero();
        for (c, t) in terms {
            v.add_term(t, &c);
        }
        v
    }

    /// Builds a vector of pure tensors written as label-name slices, each with
    /// coefficient one.
    pub fn of(tensors: &[&[&str]]) -> Self {
        TensorVec::from_terms(tensors.iter().map(|t| (Scalar::one(), labels(t))))
    }

    pub fn add_term(&mut self, t: Tensor, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (t, x) in &other.terms {
            self.add_term(t.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorVec {
        if c.is_zero() {
            return TensorVec::zero();
        }
        TensorVec { terms: self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &[Label]) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tensor, &Scalar)> {
        self.terms.iter()
    }

    /// Degrees of the stored tensors (a single value for homogeneous vectors).
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Vec::len).collect()
    }

    /// Labels occurring anywhere in the vector.
    pub fn support_labels(&self) -> BTreeSet<Label> {
        self.terms.keys().flatten().cloned().collect()
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                let mut st = s.clone();
                st.extend(t.iter().cloned());
                out.add_term(st, &(a * b));
            }
        }
        out
    }

    /// Applies a permutation of tensor factors: factor `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> TensorVec {
        let mut out = TensorVec::zero();
        for (t, c) in &self.terms {
            let mut nt = t.clone();
            for (i, l) in t.iter().enumerate() {
                nt[perm[i]] = l.clone();
            }
            out.add_term(nt, c);
        }
        out
    }

    /// Maps each label letter-wise through `f`, expanding linearly.
    pub fn map_factors<F: Fn(&Label) -> TensorVec>(&self, f: F) -> TensorVec {
        let mut out = TensorVec::zero();
        for (t, c) in &self.terms {
            let mut acc = TensorVec::basis(Vec::new()).scale(c);
            for l in t {
                acc = acc.tensor(&f(l));
            }
            out.add_scaled(&acc, &Scalar::one());
        }
        out
    }
}

impl std::ops::Add<&TensorVec> for &TensorVec {
    type Output = TensorVec;
    fn add(self, rhs: &TensorVec) -> TensorVec {
        let mut v = self.clone();
        v.add_scaled(rhs, &Scalar::one());
        v
    }
}

impl std::ops::Sub<&TensorVec> for &TensorVec {
    type Output = TensorVec;
    fn sub(self, rhs: &TensorVec) -> TensorVec {
        let mut v = self.clone();
        v.add_scaled(rhs, &-Scalar::one());
        v
    }
}

impl std::ops::Neg for &TensorVec {
    type Output = TensorVec;
    fn neg(self) -> TensorVec {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for TensorVec {
    /// Prints `2*a⊗b - (q + 1)*c⊗d`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_form() && !c.is_compound();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                if mag.is_compound() {
                    write!(f, "({mag})*")?;
                } else {
                    write!(f, "{mag}*")?;
                }
            }
            if t.is_empty() {
                write!(f, "1")?;
            }
            for (k, l) in t.iter().enumerate() {
                if k > 0 {
                    write!(f, "⊗")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A linear form `V → k` given by its values on basis labels (absent labels
/// map to zero).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct LinearForm {
    values: BTreeMap<Label, Scalar>,
}

impl LinearForm {
    pub fn new() -> Self {
        LinearForm::default()
    }

    pub fn from_values<I: IntoIterator<Item = (Label, Scalar)>>(values: I) -> Self {
        let mut f = LinearForm::new();
        for (l, c) in values {
            f.set(l, c);
        }
        f
    }

    pub fn set(&mut self, l: Label, c: Scalar) {
        if c.is_zero() {
            self.values.remove(&l);
        } else {
            self.values.insert(l, c);
        }
    }

    pub fn value(&self, l: &Label) -> Scalar {
        self.values.get(l).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &Scalar)> {
        self.values.iter()
    }

    /// Evaluates the form on a degree-one vector.
    pub fn eval(&self, v: &TensorVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (t, c) in v.iter() {
            if let [l] = t.as_slice() {
                acc += &(c * &self.value(l));
            }
        }
        acc
    }

    /// Contracts tensor factor `slot` of every term with this form.
    pub fn contract(&self, v: &TensorVec, slot: usize) -> TensorVec {
        let mut out = TensorVec::zero();
        for (t, c) in v.iter() {
            let w = self.value(&t[slot]);
            if w.is_zero() {
                continue;
            }
            let mut rest = t.clone();
            rest.remove(slot);
            out.add_term(rest, &(c * &w));
        }
        out
    }
}
