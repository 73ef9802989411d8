use std::collections::BTreeMap;
use std::fmt;

use crate::coalgebra::{solve_counit, AxiomReport, CounitSide, StructureError};
use crate::constructions::{Chirality, EntangledStructure};
use crate::exactlinalg::{Label, LinearForm, MultiLinearMap, Scalar};

use super::{nc_normalize, nc_normalize_tensor, NCPoly, NCTensor, RewriteError, RewriteSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("no antipode value for `{0}`")]
    MissingAntipode(Label),
    #[error("no counit solves the boundary containing `{0}`")]
    NoCounit(Label),
}

/// The image of a word under a coproduct extended multiplicatively.
fn on_word(m: &MultiLinearMap, w: &[Label]) -> NCTensor {
    w.iter().fold(NCTensor::unit(m.target_degree()), |acc, l| acc.mul(&NCTensor::from_tensor(&m.at(l))))
}

/// For each named coproduct and each pair of generators `(g, h)` inside one
/// boundary: the coproduct applied word by word to the normal form of `gh`
/// equals `δ(g)δ(h)`, both normalised factorwise. Also records `δ(1) = 1⊗1`.
pub fn check_bridge_homomorphism(e: &EntangledStructure, r: &RewriteSystem, names: &[&str]) -> Result<AxiomReport, HopfError> {
    let mut report = AxiomReport::new("bridge_homomorphism");
    for name in names {
        let m = e.get(name)?;
        report.record(&format!("{name}(1) = 1⊗1"), "1", &on_word(m, &[]), &NCTensor::unit(m.target_degree()));
        for side in [e.c1(), e.c2()] {
            for g in side.labels() {
                for h in side.labels() {
                    let nf = nc_normalize(&NCPoly::word(vec![g.clone(), h.clone()]), r)?;
                    let mut lhs = NCTensor::zero();
                    for (w, c) in nf.iter() {
                        lhs.add_scaled(&on_word(m, w), c);
                    }
                    let lhs = nc_normalize_tensor(&lhs, r)?;
                    let rhs = nc_normalize_tensor(&on_word(m, std::slice::from_ref(g)).mul(&on_word(m, std::slice::from_ref(h))), r)?;
                    report.record(&format!("{name}(gh) = {name}(g){name}(h)"), format!("{g}{h}"), &lhs, &rhs);
                }
            }
        }
    }
    Ok(report)
}

/// Which of the two assembled antipodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sigma {
    /// `S₁` on C1, `Φ⁻¹∘S₂` on C2.
    One,
    /// `S₂` on C2, `Φ∘S₁` on C1.
    Two,
}

/// `Right` is `m(id⊗σ)δ`, `Left` is `m(σ⊗id)δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Right,
    Left,
}

/// `m(id⊗σ)δ = 1ε*` or `m(σ⊗id)δ = 1ε*` for a named bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfIdentity {
    pub bridge: String,
    pub sigma: Sigma,
    pub side: Side,
}

impl HopfIdentity {
    pub fn new(bridge: &str, sigma: Sigma, side: Side) -> Self {
        HopfIdentity { bridge: bridge.to_string(), sigma, side }
    }
}

impl fmt::Display for HopfIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sigma {
            Sigma::One => "σ1",
            Sigma::Two => "σ2",
        };
        match self.side {
            Side::Right => write!(f, "m(id⊗{s}){} = 1ε*", self.bridge),
            Side::Left => write!(f, "m({s}⊗id){} = 1ε*", self.bridge),
        }
    }
}

/// The identities stated for each kind of entanglement: four for a chiral
/// self-entanglement, two for an achiral one.
pub fn asserted_identities(e: &EntangledStructure) -> Vec<HopfIdentity> {
    match e.chirality() {
        Chirality::Chiral => vec![
            HopfIdentity::new("delta1", Sigma::One, Side::Right),
            HopfIdentity::new("delta1_hat", Sigma::One, Side::Left),
            HopfIdentity::new("delta2", Sigma::Two, Side::Right),
            HopfIdentity::new("delta2_hat", Sigma::Two, Side::Left),
        ],
        Chirality::Achiral => {
            vec![HopfIdentity::new("delta1", Sigma::One, Side::Right), HopfIdentity::new("delta2_tilde", Sigma::Two, Side::Right)]
        }
    }
}

/// Antipodes `S₁` on C1 and `S₂` on C2 as polynomials in the generators,
/// with the assembled counit `ε*`.
#[derive(Clone, Debug)]
pub struct AntipodeData {
    s1: BTreeMap<Label, NCPoly>,
    s2: BTreeMap<Label, NCPoly>,
    eps_star: LinearForm,
    c1: Vec<Label>,
    forward: BTreeMap<Label, NCPoly>,
    inverse: BTreeMap<Label, NCPoly>,
}

impl AntipodeData {
    /// `ε*` is taken from `eps_star` when present, otherwise solved as a
    /// right counit of the glued coproduct on each boundary.
    pub fn new(e: &EntangledStructure, s1: BTreeMap<Label, NCPoly>, s2: BTreeMap<Label, NCPoly>) -> Result<Self, HopfError> {
        for (side, s) in [(e.c1(), &s1), (e.c2(), &s2)] {
            if let Some(l) = side.labels().iter().find(|l| !s.contains_key(*l)) {
                return Err(HopfError::MissingAntipode(l.clone()));
            }
        }
        let eps_star = match e.structure().counit("eps_star") {
            Some(f) => f.clone(),
            None => {
                let mut values = Vec::new();
                for side in [e.c1(), e.c2()] {
                    let eps = solve_counit(e.glued(), CounitSide::Right, side.labels())
                        .ok_or_else(|| HopfError::NoCounit(side.labels()[0].clone()))?;
                    values.extend(side.labels().iter().map(|l| (l.clone(), eps.value(l))));
                }
                LinearForm::from_values(values)
            }
        };
        let phi = e.channel();
        let forward = phi.source().labels().iter().map(|l| (l.clone(), NCPoly::from_linear(&phi.forward(l)))).collect();
        let inverse = phi.target().labels().iter().map(|l| (l.clone(), NCPoly::from_linear(&phi.inverse(l)))).collect();
        Ok(AntipodeData { s1, s2, eps_star, c1: e.c1().labels().to_vec(), forward, inverse })
    }

    pub fn eps_star(&self) -> &LinearForm {
        &self.eps_star
    }

    fn through(map: &BTreeMap<Label, NCPoly>, p: &NCPoly) -> NCPoly {
        p.substitute(|g| map.get(g).cloned().unwrap_or_else(|| NCPoly::generator(g)))
    }

    /// `S*`: `S₁` on C1 and `S₂` on C2.
    pub fn s_star(&self, l: &Label) -> NCPoly {
        self.s1.get(l).or_else(|| self.s2.get(l)).cloned().unwrap_or_default()
    }

    pub fn sigma(&self, which: Sigma, l: &Label) -> NCPoly {
        let in_c1 = self.c1.contains(l);
        match (which, in_c1) {
            (Sigma::One, true) => self.s1[l].clone(),
            (Sigma::One, false) => Self::through(&self.inverse, &self.s2[l]),
            (Sigma::Two, false) => self.s2[l].clone(),
            (Sigma::Two, true) => Self::through(&self.forward, &self.s1[l]),
        }
    }
}

/// `S₁(a) = d, S₁(d) = a, S₁(b) = −qb, S₁(c) = −q⁻¹c` and
/// `S̃₂(y) = z, S̃₂(z) = y, S̃₂(x) = −qx, S̃₂(u) = −q⁻¹u`.
pub fn slq2_antipodes(e: &EntangledStructure) -> Result<AntipodeData, HopfError> {
    let g = |n: &str| NCPoly::of(&[n]);
    let (mq, mqi) = (-Scalar::q(), -Scalar::q_pow(-1));
    let table = |rows: [(&str, NCPoly); 4]| rows.into_iter().map(|(l, p)| (Label::new(l), p)).collect::<BTreeMap<_, _>>();
    let s1 = table([("a", g("d")), ("d", g("a")), ("b", g("b").scale(&mq)), ("c", g("c").scale(&mqi))]);
    let s2 = table([("y", g("z")), ("z", g("y")), ("x", g("x").scale(&mq)), ("u", g("u").scale(&mqi))]);
    AntipodeData::new(e, s1, s2)
}

fn letter(l: &Label) -> NCPoly {
    NCPoly::generator(l)
}

/// Evaluates each identity on every generator of both boundaries, modulo `r`.
pub fn check_l_hopf(e: &EntangledStructure, s: &AntipodeData, r: &RewriteSystem, ids: &[HopfIdentity]) -> Result<AxiomReport, HopfError> {
    let mut report = AxiomReport::new("l_hopf");
    for id in ids {
        let m = e.get(&id.bridge)?;
        let title = id.to_string();
        for v in e.space().labels() {
            let mut lhs = NCPoly::zero();
            for (t, c) in m.at(v).iter() {
                let p = match id.side {
                    Side::Right => letter(&t[0]).mul(&s.sigma(id.sigma, &t[1])),
                    Side::Left => s.sigma(id.sigma, &t[0]).mul(&letter(&t[1])),
                };
                lhs.add_scaled(&p, c);
            }
            let lhs = nc_normalize(&lhs, r)?;
            let rhs = NCPoly::one().scale(&s.eps_star().value(v));
            report.record(&title, v, &lhs, &rhs);
        }
    }
    Ok(report)
}

/// Every bridge of `e` paired with both antipodes on both sides.
pub fn all_orientations(e: &EntangledStructure) -> Vec<HopfIdentity> {
    let mut out = Vec::new();
    for b in e.bridges() {
        for sigma in [Sigma::One, Sigma::Two] {
            for side in [Side::Right, Side::Left] {
                out.push(HopfIdentity::new(&b.name, sigma, side));
            }
        }
    }
    out
}
