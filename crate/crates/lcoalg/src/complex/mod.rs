//! Flower coproducts of a coalgebra with a group-like element, the Ito
//! coproducts `Δ − δ_f`, `Δ − δ̃_f` and the boundary operators built from
//! them.

use std::fmt;

use crate::coalgebra::{check, Axiom, AxiomReport, Bound, CheckError, LStructure, StructureError};
use crate::constructions::ito_property;
use crate::exactlinalg::{BasisSpace, Label, MapError, MultiLinearMap, Scalar, TensorVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("`{0}` is not a basis label")]
    UnknownLabel(Label),
    #[error("`{0}` is not group-like for Delta")]
    NotGroupLike(Label),
    #[error("the carrier has no algebra")]
    NoAlgebra,
    #[error("Delta is not coassociative")]
    NotCoassociative(Box<AxiomReport>),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// A carrier with `delta_f(a) = a⊗g₀`, `delta_f_tilde(a) = g₀⊗a` and their
/// sum `Delta_f`, next to the carrier's own `Delta` when present.
#[derive(Clone, Debug)]
pub struct FlowerStructure {
    structure: LStructure,
    g0: Label,
}

/// Builds the flower coproducts through the group-like `g0`.
pub fn flower_coproducts(c: &LStructure, g0: &Label) -> Result<FlowerStructure, ComplexError> {
    let space = c.space();
    if !space.contains(g0) {
        return Err(ComplexError::UnknownLabel(g0.clone()));
    }
    if let Some(d) = c.coproduct("Delta") {
        if d.at(g0) != TensorVec::basis(vec![g0.clone(), g0.clone()]) {
            return Err(ComplexError::NotGroupLike(g0.clone()));
        }
    }
    let pair = |x: &Label, y: &Label| TensorVec::basis(vec![x.clone(), y.clone()]);
    let right = MultiLinearMap::coproduct(space, space.labels().iter().map(|a| (a.clone(), pair(a, g0))))?;
    let left = MultiLinearMap::coproduct(space, space.labels().iter().map(|a| (a.clone(), pair(g0, a))))?;
    let sum = right.add(&left)?;
    let mut s = c.clone();
    s.insert_coproduct("delta_f", right)?;
    s.insert_coproduct("delta_f_tilde", left)?;
    s.insert_coproduct("Delta_f", sum)?;
    Ok(FlowerStructure { structure: s, g0: g0.clone() })
}

impl FlowerStructure {
    pub fn structure(&self) -> &LStructure {
        &self.structure
    }

    pub fn space(&self) -> &BasisSpace {
        self.structure.space()
    }

    pub fn g0(&self) -> &Label {
        &self.g0
    }

    pub fn delta(&self) -> Result<&MultiLinearMap, StructureError> {
        self.structure.get("Delta")
    }

    pub fn delta_f(&self) -> &MultiLinearMap {
        self.structure.coproduct("delta_f").expect("built by flower_coproducts")
    }

    pub fn delta_f_tilde(&self) -> &MultiLinearMap {
        self.structure.coproduct("delta_f_tilde").expect("built by flower_coproducts")
    }

    pub fn delta_flower(&self) -> &MultiLinearMap {
        self.structure.coproduct("Delta_f").expect("built by flower_coproducts")
    }

    /// `d→ = Δ − δ_f`
    pub fn d_right(&self) -> Result<MultiLinearMap, ComplexError> {
        Ok(self.delta()?.sub(self.delta_f())?)
    }

    /// `d← = Δ − δ̃_f`
    pub fn d_left(&self) -> Result<MultiLinearMap, ComplexError> {
        Ok(self.delta()?.sub(self.delta_f_tilde())?)
    }

    /// `Δ − Δ_f`
    pub fn ito_difference(&self) -> Result<MultiLinearMap, ComplexError> {
        Ok(self.delta()?.sub(self.delta_flower())?)
    }

    /// `(δ̃_f⊗id)δ_f = (id⊗δ_f)δ̃_f` and `id⊗δ̃_f = δ_f⊗id` on degree two.
    pub fn markov_report(&self) -> AxiomReport {
        let (f, ft) = (self.delta_f(), self.delta_f_tilde());
        let mut r = Bound::maps(Axiom::Entanglement, &[("Delta", f), ("Delta_tilde", ft)], &[])
            .expect("roles bound")
            .check(Axiom::Entanglement, self.space().labels());
        let lhs = ft.at_slot(2, 1).expect("degree two");
        let rhs = f.at_slot(2, 0).expect("degree two");
        for t in self.space().tensors(2) {
            let name = render(&t);
            r.record("id⊗δ̃_f = δ_f⊗id", &name, &*lhs.image(&t), &*rhs.image(&t));
        }
        r
    }

    /// The Ito property of `d→` over `δ_f` and of `d←` over `δ̃_f`, and
    /// `(id⊗d→)d← = (d←⊗id)d→`.
    pub fn ito_report(&self) -> Result<AxiomReport, ComplexError> {
        let mut r = AxiomReport::new("flower_ito");
        let (right, left) = (self.d_right()?, self.d_left()?);
        r.absorb(check_ito(&right, &self.structure, self.delta_f())?);
        r.absorb(check_ito(&left, &self.structure, self.delta_f_tilde())?);
        for l in self.space().labels() {
            let lhs = right.apply_at(&left.at(l), 1);
            let rhs = left.apply_at(&right.at(l), 0);
            r.record("(id⊗d→)d← = (d←⊗id)d→", l, &lhs, &rhs);
        }
        Ok(r)
    }
}

fn render(t: &[Label]) -> String {
    t.iter().map(|l| l.as_str()).collect::<Vec<_>>().join("⊗")
}

/// Which formula a [`BoundaryOperator`] is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryForm {
    /// `∂₀ = Δ − Δ_f`; `∂_n = d←⊗id^n + Σ_{i=2}^{n} (−1)^{i+1} Δ_i + (−1)^n id^n⊗d→`.
    Primary,
    /// `∂′₀ = Δ`; `∂′_n = Σ_{i=1}^{n+1} (−1)^{i+1} Δ_i`.
    Prime,
    /// `∂_n = Σ_{i=1}^{n+1} (−1)^{i+1} (Δ − Δ_f)_i`.
    Alternative,
    /// The primary formula read literally: middle sum over `2 ≤ j ≤ n−1` and
    /// last sign `(−1)^{n+1}`.
    PrintedPrimary,
    /// The alternative formula with the constant sign `(−1)^{n+1}`.
    PrintedAlternative,
}

impl BoundaryForm {
    pub const ALL: [BoundaryForm; 5] = [
        BoundaryForm::Primary,
        BoundaryForm::Prime,
        BoundaryForm::Alternative,
        BoundaryForm::PrintedPrimary,
        BoundaryForm::PrintedAlternative,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BoundaryForm::Primary => "primary",
            BoundaryForm::Prime => "prime",
            BoundaryForm::Alternative => "alternative",
            BoundaryForm::PrintedPrimary => "printed_primary",
            BoundaryForm::PrintedAlternative => "printed_alternative",
        }
    }
}

impl fmt::Display for BoundaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl std::str::FromStr for BoundaryForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundaryForm::ALL.into_iter().find(|f| f.id() == s).ok_or_else(|| format!("unknown boundary form `{s}`"))
    }
}

/// `∂_n` as a map from degree `n+1` to degree `n+2`.
#[derive(Clone, Debug)]
pub struct BoundaryOperator {
    degree: usize,
    form: BoundaryForm,
    map: MultiLinearMap,
}

impl BoundaryOperator {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn form(&self) -> BoundaryForm {
        self.form
    }

    pub fn map(&self) -> &MultiLinearMap {
        &self.map
    }
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn slot_sum(space: &BasisSpace, degree: usize, terms: &[(Scalar, &MultiLinearMap, usize)]) -> Result<MultiLinearMap, MapError> {
    let mut out = MultiLinearMap::zero(space, degree, degree + 1);
    for (c, m, slot) in terms {
        out = out.add_scaled(&m.at_slot(degree, *slot)?, c)?;
    }
    Ok(out)
}

/// Builds `∂_n` in the requested form; slots are 1-based in the formulas.
pub fn boundary(n: usize, c: &FlowerStructure, form: BoundaryForm) -> Result<BoundaryOperator, ComplexError> {
    let delta = c.delta()?;
    let diff = c.ito_difference()?;
    let space = c.space();
    let deg = n + 1;
    let one = Scalar::one();
    let map = match (form, n) {
        (BoundaryForm::Prime, 0) => delta.clone(),
        (_, 0) => diff,
        (BoundaryForm::Prime, _) => {
            let terms: Vec<_> = (1..=deg).map(|i| (sign(i + 1), delta, i - 1)).collect();
            slot_sum(space, deg, &terms)?
        }
        (BoundaryForm::Alternative, _) => {
            let terms: Vec<_> = (1..=deg).map(|i| (sign(i + 1), &diff, i - 1)).collect();
            slot_sum(space, deg, &terms)?
        }
        (BoundaryForm::PrintedAlternative, _) => {
            let terms: Vec<_> = (1..=deg).map(|i| (sign(n + 1), &diff, i - 1)).collect();
            slot_sum(space, deg, &terms)?
        }
        (BoundaryForm::Primary | BoundaryForm::PrintedPrimary, _) => {
            let (left, right) = (c.d_left()?, c.d_right()?);
            let (last, last_sign) = match form {
                BoundaryForm::Primary => (n, sign(n)),
                _ => (n.saturating_sub(1), sign(n + 1)),
            };
            let mut terms = vec![(one, &left, 0)];
            terms.extend((2..=last).map(|j| (sign(j + 1), delta, j - 1)));
            terms.push((last_sign, &right, n));
            slot_sum(space, deg, &terms)?
        }
    };
    Ok(BoundaryOperator { degree: n, form, map })
}

/// Dimensions around `∂_n`: source dimension, rank, kernel and
/// `ker ∂_n / im ∂_{n−1}` (absent when the image is not inside the kernel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankRow {
    pub degree: usize,
    pub source_dim: usize,
    pub rank: usize,
    pub kernel: usize,
    pub homology: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct ComplexReport {
    pub report: AxiomReport,
    pub ranks: Vec<RankRow>,
}

fn record_zero(r: &mut AxiomReport, eq: &str, m: &MultiLinearMap) {
    let zero = TensorVec::zero();
    for t in m.space().tensors(m.source_degree()) {
        r.record(eq, render(&t), &*m.image(&t), &zero);
    }
}

fn require_coassociative(c: &FlowerStructure) -> Result<(), ComplexError> {
    let r = check(c.structure(), "coassoc", &[("Delta", "Delta")])?;
    if r.passed() {
        Ok(())
    } else {
        Err(ComplexError::NotCoassociative(Box::new(r)))
    }
}

fn square_report(c: &FlowerStructure, max: usize, form: BoundaryForm) -> Result<(AxiomReport, Vec<BoundaryOperator>), ComplexError> {
    require_coassociative(c)?;
    let mut r = AxiomReport::new(format!("complex ({form})"));
    let ops: Vec<BoundaryOperator> = (0..=max + 1).map(|n| boundary(n, c, form)).collect::<Result<_, _>>()?;
    for n in 0..=max {
        let comp = ops[n + 1].map().compose(ops[n].map())?;
        let eq = match (n, form) {
            (0, BoundaryForm::Prime) => "∂₁∂₀ = 0 (∂₀ = Δ)".to_string(),
            (0, _) => "∂₁(Δ − Δ_f) = 0".to_string(),
            _ => format!("∂{}∂{} = 0", n + 1, n),
        };
        record_zero(&mut r, &eq, &comp);
    }
    for x in primitives(c)? {
        r.record("∂₀(x) = 0 on primitives", &x, &ops[0].map().apply(&x), &TensorVec::zero());
    }
    Ok((r, ops))
}

/// `∂_{n+1}∂_n = 0` for `0 < n ≤ max` and `∂₁∂₀ = 0` in the given form,
/// `∂₀` on the primitives of `Δ`, and ranks of `∂₀ … ∂_max`.
pub fn check_complex_form(c: &FlowerStructure, max: usize, form: BoundaryForm) -> Result<ComplexReport, ComplexError> {
    let (report, ops) = square_report(c, max, form)?;
    let mut ranks = Vec::new();
    let mut prev_rank = 0;
    for op in &ops[..=max] {
        let source_dim = c.space().dim().pow(op.degree as u32 + 1);
        let rank = op.map().rank();
        let kernel = source_dim - rank;
        ranks.push(RankRow { degree: op.degree, source_dim, rank, kernel, homology: kernel.checked_sub(prev_rank) });
        prev_rank = rank;
    }
    Ok(ComplexReport { report, ranks })
}

/// [`check_complex_form`] for the primary boundary.
pub fn check_complex(c: &FlowerStructure, max: usize) -> Result<ComplexReport, ComplexError> {
    check_complex_form(c, max, BoundaryForm::Primary)
}

/// A basis of `{x : Δx = x⊗g₀ + g₀⊗x}`.
pub fn primitives(c: &FlowerStructure) -> Result<Vec<TensorVec>, ComplexError> {
    Ok(c.ito_difference()?.kernel())
}

/// The two forms agree as maps on degrees `1 … max`.
pub fn compare_forms(c: &FlowerStructure, a: BoundaryForm, b: BoundaryForm, max: usize) -> Result<AxiomReport, ComplexError> {
    let mut r = AxiomReport::new(format!("{a} = {b}"));
    for n in 1..=max {
        let (x, y) = (boundary(n, c, a)?, boundary(n, c, b)?);
        for t in c.space().tensors(n + 1) {
            r.record(&format!("∂{n}"), render(&t), &*x.map().image(&t), &*y.map().image(&t));
        }
    }
    Ok(r)
}

/// How one candidate formula fares against the two sign requirements.
#[derive(Debug, Clone)]
pub struct SignCandidate {
    pub form: BoundaryForm,
    /// `∂₁ = d←⊗id − id⊗d→`.
    pub matches_d1: bool,
    /// `∂_{n+1}∂_n = 0` up to the tested degree, and `∂₁∂₀ = 0`.
    pub squares_to_zero: bool,
}

impl SignCandidate {
    pub fn accepted(&self) -> bool {
        self.matches_d1 && self.squares_to_zero
    }
}

/// Tests the printed and alternating sign patterns of both boundary
/// formulas against the displayed `∂₁` and against `∂∘∂ = 0`.
pub fn resolve_signs(c: &FlowerStructure, max: usize) -> Result<Vec<SignCandidate>, ComplexError> {
    let (left, right) = (c.d_left()?, c.d_right()?);
    let d1 = left.at_slot(2, 0)?.sub(&right.at_slot(2, 1)?)?;
    let candidates = [BoundaryForm::Primary, BoundaryForm::PrintedPrimary, BoundaryForm::Alternative, BoundaryForm::PrintedAlternative];
    candidates
        .into_iter()
        .map(|form| {
            let matches_d1 = boundary(1, c, form)?.map() == &d1;
            let squares_to_zero = square_report(c, max, form)?.0.passed();
            Ok(SignCandidate { form, matches_d1, squares_to_zero })
        })
        .collect()
}

/// `d(1) = 0` and `d(xy) = d(x)d(y) + d(x)∘y + x∘d(y)` with
/// `x∘t = comodule(x)·t` factorwise, on all basis pairs of `c`.
pub fn check_ito(d: &MultiLinearMap, c: &LStructure, comodule: &MultiLinearMap) -> Result<AxiomReport, ComplexError> {
    let a = c.algebra().ok_or(ComplexError::NoAlgebra)?;
    Ok(ito_property(d, comodule, a, c.space().labels()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cyclic_group;

    fn z3() -> FlowerStructure {
        flower_coproducts(&cyclic_group(3), &Label::new("g0")).unwrap()
    }

    #[test]
    fn flower_values() {
        let f = z3();
        assert_eq!(f.delta_f().at_name("g1"), TensorVec::of(&[&["g1", "g0"]]));
        assert_eq!(f.delta_flower().at_name("g0"), TensorVec::of(&[&["g0", "g0"]]).scale(&Scalar::from_int(2)));
        assert!(f.markov_report().passed());
    }

    #[test]
    fn refuses_non_group_like() {
        assert_eq!(flower_coproducts(&crate::fixtures::f(), &Label::new("b")).unwrap_err(), ComplexError::NotGroupLike(Label::new("b")));
        assert!(matches!(flower_coproducts(&cyclic_group(2), &Label::new("zz")), Err(ComplexError::UnknownLabel(_))));
    }

    #[test]
    fn prime_zero_is_delta() {
        let f = z3();
        assert_eq!(boundary(0, &f, BoundaryForm::Prime).unwrap().map(), f.delta().unwrap());
    }

    #[test]
    fn form_names_round_trip() {
        for f in BoundaryForm::ALL {
            assert_eq!(f.id().parse::<BoundaryForm>().unwrap(), f);
        }
    }
}
