//! Sparse multilinear maps `V^{⊗n} → V^{⊗m}` on a named basis.
//!
//! Slots are numbered from zero: slot `i` of a degree-`n` tensor is its
//! `(i+1)`-th factor.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{BasisSpace, Label, Matrix, Scalar, Tensor, TensorVec};

/// Errors from building or combining maps.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("label `{0}` is not in the domain space")]
    UnknownLabel(Label),
    #[error("expected a tensor of degree {expected}, found degree {found}")]
    Degree { expected: usize, found: usize },
    #[error("slot {slot} is out of range for degree {degree}")]
    SlotOutOfRange { slot: usize, degree: usize },
    #[error("maps have shapes {left} and {right}")]
    Shape { left: String, right: String },
    #[error("maps live on different basis spaces")]
    SpaceMismatch,
}

/// A linear map from degree-`source` tensors to degree-`target` tensors,
/// tabulated on basis tensors. Missing rows map to zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiLinearMap {
    space: BasisSpace,
    source: usize,
    target: usize,
    table: BTreeMap<Tensor, TensorVec>,
}

impl MultiLinearMap {
    /// Builds a map from rows; repeated rows are summed.
    pub fn new<I>(space: BasisSpace, source: usize, target: usize, rows: I) -> Result<Self, MapError>
    where
        I: IntoIterator<Item = (Tensor, TensorVec)>,
    {
        let mut table: BTreeMap<Tensor, TensorVec> = BTreeMap::new();
        for (key, image) in rows {
            check_tensor(&space, &key, source)?;
            for (t, _) in image.iter() {
                check_tensor(&space, t, target)?;
            }
            let entry = table.entry(key).or_default();
            entry.add_scaled(&image, &Scalar::one());
        }
        table.retain(|_, v| !v.is_zero());
        Ok(MultiLinearMap { space, source, target, table })
    }

    /// A coproduct-shaped map `V → V⊗V` from per-label images.
    pub fn coproduct<I>(space: &BasisSpace, rows: I) -> Result<Self, MapError>
    where
        I: IntoIterator<Item = (Label, TensorVec)>,
    {
        MultiLinearMap::new(space.clone(), 1, 2, rows.into_iter().map(|(l, v)| (vec![l], v)))
    }

    /// An endomorphism `V → V` from per-label images.
    pub fn linear<I>(space: &BasisSpace, rows: I) -> Result<Self, MapError>
    where
        I: IntoIterator<Item = (Label, TensorVec)>,
    {
        MultiLinearMap::new(space.clone(), 1, 1, rows.into_iter().map(|(l, v)| (vec![l], v)))
    }

    pub fn zero(space: &BasisSpace, source: usize, target: usize) -> Self {
        MultiLinearMap { space: space.clone(), source, target, table: BTreeMap::new() }
    }

    pub fn identity(space: &BasisSpace, degree: usize) -> Self {
        let table = space.tensors(degree).into_iter().map(|t| (t.clone(), TensorVec::basis(t))).collect();
        MultiLinearMap { space: space.clone(), source: degree, target: degree, table }
    }

    /// The flip `τ(x⊗y) = y⊗x`.
    pub fn twist(space: &BasisSpace) -> Self {
        let table = space
            .tensors(2)
            .into_iter()
            .map(|t| {
                let flipped = vec![t[1].clone(), t[0].clone()];
                (t, TensorVec::basis(flipped))
            })
            .collect();
        MultiLinearMap { space: space.clone(), source: 2, target: 2, table }
    }

    pub fn space(&self) -> &BasisSpace {
        &self.space
    }

    pub fn source_degree(&self) -> usize {
        self.source
    }

    pub fn target_degree(&self) -> usize {
        self.target
    }

    fn shape(&self) -> String {
        format!("{}→{}", self.source, self.target)
    }

    /// Nonzero rows in key order.
    pub fn rows(&self) -> impl Iterator<Item = (&Tensor, &TensorVec)> {
        self.table.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// Image of a basis tensor.
    pub fn image(&self, t: &[Label]) -> Cow<'_, TensorVec> {
        match self.table.get(t) {
            Some(v) => Cow::Borrowed(v),
            None => Cow::Owned(TensorVec::zero()),
        }
    }

    /// Image of a single basis label (for maps of source degree one).
    pub fn at(&self, l: &Label) -> TensorVec {
        self.image(std::slice::from_ref(l)).into_owned()
    }

    /// Image of a label given by name.
    pub fn at_name(&self, name: &str) -> TensorVec {
        self.at(&Label::new(name))
    }

    /// Applies the map to a homogeneous vector of the source degree.
    pub fn apply(&self, v: &TensorVec) -> TensorVec {
        self.apply_at(v, 0)
    }

    /// Applies the map on factors `slot..slot+source` of each term, identity
    /// elsewhere. Terms too short for the slot are dropped.
    pub fn apply_at(&self, v: &TensorVec, slot: usize) -> TensorVec {
        let mut out = TensorVec::zero();
        for (t, c) in v.iter() {
            if t.len() < slot + self.source {
                continue;
            }
            let Some(img) = self.table.get(&t[slot..slot + self.source]) else {
                continue;
            };
            for (u, d) in img.iter() {
                let mut nt = Vec::with_capacity(t.len() - self.source + self.target);
                nt.extend_from_slice(&t[..slot]);
                nt.extend_from_slice(u);
                nt.extend_from_slice(&t[slot + self.source..]);
                out.add_term(nt, &(c * d));
            }
        }
        out
    }

    /// The concrete map `id^{slot} ⊗ f ⊗ id^{rest}` on degree-`degree`
    /// tensors.
    pub fn at_slot(&self, degree: usize, slot: usize) -> Result<MultiLinearMap, MapError> {
        if degree < self.source || slot > degree - self.source {
            return Err(MapError::SlotOutOfRange { slot, degree });
        }
        let target = degree - self.source + self.target;
        let mut table = BTreeMap::new();
        for t in self.space.tensors(degree) {
            let img = self.apply_at(&TensorVec::basis(t.clone()), slot);
            if !img.is_zero() {
                table.insert(t, img);
            }
        }
        Ok(MultiLinearMap { space: self.space.clone(), source: degree, target, table })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MultiLinearMap) -> Result<MultiLinearMap, MapError> {
        if self.space != inner.space {
            return Err(MapError::SpaceMismatch);
        }
        if inner.target != self.source {
            return Err(MapError::Shape { left: self.shape(), right: inner.shape() });
        }
        let table = inner.table.iter().map(|(k, v)| (k.clone(), self.apply(v))).filter(|(_, v)| !v.is_zero()).collect();
        Ok(MultiLinearMap { space: self.space.clone(), source: inner.source, target: self.target, table })
    }

    fn same_shape(&self, other: &MultiLinearMap) -> Result<(), MapError> {
        if self.space != other.space {
            return Err(MapError::SpaceMismatch);
        }
        if self.source != other.source || self.target != other.target {
            return Err(MapError::Shape { left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &MultiLinearMap, c: &Scalar) -> Result<MultiLinearMap, MapError> {
        self.same_shape(other)?;
        let mut table = self.table.clone();
        for (k, v) in &other.table {
            table.entry(k.clone()).or_default().add_scaled(v, c);
        }
        table.retain(|_, v| !v.is_zero());
        Ok(MultiLinearMap { space: self.space.clone(), source: self.source, target: self.target, table })
    }

    pub fn add(&self, other: &MultiLinearMap) -> Result<MultiLinearMap, MapError> {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &MultiLinearMap) -> Result<MultiLinearMap, MapError> {
        self.add_scaled(other, &-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> MultiLinearMap {
        let mut out = MultiLinearMap::zero(&self.space, self.source, self.target);
        if !c.is_zero() {
            out.table = self.table.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect();
        }
        out
    }

    /// Keeps only rows whose key labels all lie in `keep`.
    pub fn restrict(&self, keep: &BTreeSet<Label>) -> MultiLinearMap {
        let table = self.table.iter().filter(|(k, _)| k.iter().all(|l| keep.contains(l))).map(|(k, v)| (k.clone(), v.clone())).collect();
        MultiLinearMap { space: self.space.clone(), source: self.source, target: self.target, table }
    }

    /// The same rows viewed on a larger space containing this one.
    pub fn extend_to(&self, space: &BasisSpace) -> Result<MultiLinearMap, MapError> {
        if let Some(l) = self.space.labels().iter().find(|l| !space.contains(l)) {
            return Err(MapError::UnknownLabel(l.clone()));
        }
        Ok(MultiLinearMap { space: space.clone(), source: self.source, target: self.target, table: self.table.clone() })
    }

    /// Replaces the image of one basis tensor.
    pub fn with_row(&self, key: Tensor, image: TensorVec) -> Result<MultiLinearMap, MapError> {
        check_tensor(&self.space, &key, self.source)?;
        for (t, _) in image.iter() {
            check_tensor(&self.space, t, self.target)?;
        }
        let mut out = self.clone();
        if image.is_zero() {
            out.table.remove(&key);
        } else {
            out.table.insert(key, image);
        }
        Ok(out)
    }

    /// The matrix of the map against all source basis tensors (columns) and
    /// the target tensors that occur in some image (rows, sorted).
    pub fn to_matrix(&self) -> (Matrix, Vec<Tensor>, Vec<Tensor>) {
        let cols = self.space.tensors(self.source);
        let rows: Vec<Tensor> =
            self.table.values().flat_map(|v| v.iter().map(|(t, _)| t.clone())).collect::<BTreeSet<_>>().into_iter().collect();
        let index: BTreeMap<&Tensor, usize> = rows.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (t, c) in self.image(col).iter() {
                m.set(index[t], j, c.clone());
            }
        }
        (m, rows, cols)
    }

    /// A basis of the kernel, as vectors of source-degree tensors.
    pub fn kernel(&self) -> Vec<TensorVec> {
        let (m, _, cols) = self.to_matrix();
        if m.rows() == 0 {
            return cols.into_iter().map(TensorVec::basis).collect();
        }
        m.kernel_basis().into_iter().map(|v| TensorVec::from_terms(v.into_iter().zip(cols.iter().cloned()))).collect()
    }

    pub fn rank(&self) -> usize {
        let (m, _, _) = self.to_matrix();
        if m.rows() == 0 {
            0
        } else {
            m.rank()
        }
    }
}

/// Exact equality of two maps of the same shape.
pub fn map_equal(f: &MultiLinearMap, g: &MultiLinearMap) -> Result<bool, MapError> {
    f.same_shape(g)?;
    Ok(f.table == g.table)
}

fn check_tensor(space: &BasisSpace, t: &[Label], degree: usize) -> Result<(), MapError> {
    if t.len() != degree {
        return Err(MapError::Degree { expected: degree, found: t.len() });
    }
    match t.iter().find(|l| !space.contains(l)) {
        Some(l) => Err(MapError::UnknownLabel(l.clone())),
        None => Ok(()),
    }
}

impl fmt::Debug for MultiLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MultiLinearMap {}", self.shape())?;
        for (k, v) in &self.table {
            let key: Vec<&str> = k.iter().map(Label::as_str).collect();
            writeln!(f, "  {} -> {}", key.join("⊗"), v)?;
        }
        Ok(())
    }
}
