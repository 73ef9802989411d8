//! Self-entanglement, achiral entanglement, codipterous sums and self-tilings.

use std::collections::{BTreeMap, BTreeSet};

use super::{glue, overlap, require, Boundary, ChannelMap, Chirality, ConstructionError, EntangledStructure};
use crate::coalgebra::{self, Axiom, AxiomReport, Bound, LStructure, Witness};
use crate::exactlinalg::{BasisSpace, Label, LinearForm, MultiLinearMap, TensorVec};
use crate::graphs::support_of;

fn coassociative(s: &LStructure, name: &str) -> Result<(), ConstructionError> {
    require(coalgebra::check(s, "coassoc", &[("Delta", name)])?)
}

/// Rows of each coproduct on the ambient space, filled from the C1 side and
/// then the C2 side. A label reached from both sides must get the same image.
struct Rows {
    space: BasisSpace,
    rows: BTreeMap<String, BTreeMap<Label, TensorVec>>,
}

impl Rows {
    fn new(space: &BasisSpace) -> Self {
        Rows { space: space.clone(), rows: BTreeMap::new() }
    }

    fn put(&mut self, name: &str, l: &Label, v: TensorVec) -> Result<(), ConstructionError> {
        let table = self.rows.entry(name.to_string()).or_default();
        match table.get(l) {
            Some(old) if old != &v => Err(ConstructionError::FixedPoint(l.clone(), name.to_string())),
            Some(_) => Ok(()),
            None => {
                table.insert(l.clone(), v);
                Ok(())
            }
        }
    }

    fn finish(self) -> LStructure {
        let mut s = LStructure::new(self.space.clone());
        for (name, rows) in self.rows {
            s.insert_coproduct(&name, glue(&self.space, rows)).expect("ambient rows");
        }
        s
    }
}

fn self_entangle_impl(c1: &LStructure, phi: &ChannelMap, allow_fixed: bool) -> Result<EntangledStructure, ConstructionError> {
    if phi.source() != c1.space() {
        return Err(ConstructionError::SourceMismatch);
    }
    if !allow_fixed {
        if let Some(l) = overlap(phi.source(), phi.target()) {
            return Err(ConstructionError::Overlap(l));
        }
    }
    coassociative(c1, "Delta")?;
    let d1 = c1.get("Delta")?;
    let space = phi.source().union(phi.target());
    let mut rows = Rows::new(&space);
    for l in phi.source().labels() {
        let v = d1.at(l);
        for name in ["Delta_star", "delta1", "delta1_hat"] {
            rows.put(name, l, v.clone())?;
        }
        let d2 = phi.push(&v);
        rows.put("delta2", l, phi.pull_at(&d2, 1))?;
        rows.put("delta2_hat", l, phi.pull_at(&d2, 0))?;
    }
    for y in phi.target().labels() {
        let v = d1.apply(&phi.inverse(y));
        let d2 = phi.push(&v);
        rows.put("Delta_star", y, d2.clone())?;
        rows.put("delta2", y, d2.clone())?;
        rows.put("delta2_hat", y, d2)?;
        rows.put("delta1", y, phi.push_at(&v, 1))?;
        rows.put("delta1_hat", y, phi.push_at(&v, 0))?;
    }
    let mut s = rows.finish();
    if let Some(e1) = c1.counit("eps") {
        let e2 = phi.transport_counit(e1);
        let star = LinearForm::from_values(space.labels().iter().map(|l| {
            let v = if phi.source().contains(l) { e1.value(l) } else { e2.value(l) };
            (l.clone(), v)
        }));
        s = s.with_counit("eps1", e1.clone())?.with_counit("eps_star", star)?;
    }
    Ok(EntangledStructure::new(s, phi.clone(), Chirality::Chiral, "Delta_star")
        .bridge("delta1", Boundary::C1, "Delta_star")
        .bridge("delta1_hat", Boundary::C1, "Delta_star")
        .bridge("delta2", Boundary::C2, "Delta_star")
        .bridge("delta2_hat", Boundary::C2, "Delta_star"))
}

/// Entangles a coassociative coalgebra (coproduct `Delta`, optional counit
/// `eps`) with its image under `Φ`.
///
/// The ambient structure holds `Delta_star`, the bridges `delta1`,
/// `delta1_hat` (home C1) and `delta2`, `delta2_hat` (home C2), and, when
/// `eps` is present, the counits `eps1` (zero on C2) and `eps_star`.
pub fn self_entangle(c1: &LStructure, phi: &ChannelMap) -> Result<EntangledStructure, ConstructionError> {
    self_entangle_impl(c1, phi, false)
}

/// [`self_entangle`] for channels whose target shares labels with the source.
/// A shared label must receive the same image from both definitions of every
/// coproduct, otherwise [`ConstructionError::FixedPoint`] names it.
pub fn self_entangle_fixed(c1: &LStructure, phi: &ChannelMap) -> Result<EntangledStructure, ConstructionError> {
    self_entangle_impl(c1, phi, true)
}

/// Labels reachable from `x` through the tensor factors of `Δ`.
fn generated(d: &MultiLinearMap, x: &Label) -> BTreeSet<Label> {
    let mut seen = BTreeSet::from([x.clone()]);
    let mut todo = vec![x.clone()];
    while let Some(l) = todo.pop() {
        for y in d.at(&l).support_labels() {
            if seen.insert(y.clone()) {
                todo.push(y);
            }
        }
    }
    seen
}

/// For every label fixed by `Φ`: both bridge definitions agree there
/// (`(id⊗Φ)Δx = Δx = (Φ⊗id)Δx`) and every label of the sub-coalgebra it
/// generates is fixed.
pub fn fixed_point_check(c1: &LStructure, phi: &ChannelMap) -> Result<AxiomReport, ConstructionError> {
    let d = c1.get("Delta")?;
    let mut r = AxiomReport::new("fixed_point");
    for x in phi.fixed_labels() {
        let v = d.at(&x);
        r.record("(id⊗Φ)Δ = Δ", &x, &phi.push_at(&v, 1), &v);
        r.record("(Φ⊗id)Δ = Δ", &x, &phi.push_at(&v, 0), &v);
        for l in generated(d, &x) {
            r.record(&format!("Φ fixes ⟨{x}⟩"), &l, &phi.forward(&l), &TensorVec::label(&l));
        }
    }
    Ok(r)
}

/// How the second coproduct is moved onto C2 in [`achiral_entangle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transport {
    /// `Δ̃₂ := (Φ⊗Φ)Δ̃₁Φ⁻¹`.
    Tilde,
    /// `Δ̃₂ := (Φ⊗Φ)Δ₁Φ⁻¹`.
    Plain,
}

/// Entangles an achiral pair (`Delta`, `Delta_tilde`) with its image.
///
/// Stores `Delta_star` (Δ₁ on C1, Δ̃₂ on C2), `delta1` and `delta2_tilde`,
/// with Δ̃₂ chosen by `transport`. Also stores the variant with two glued
/// coproducts: `Delta_up` (Δ₁ and its transport), `Delta_tilde_up` (Δ̃₁ and
/// its transport) and `delta2_tilde_hat`.
pub fn achiral_entangle(g: &LStructure, phi: &ChannelMap, transport: Transport) -> Result<EntangledStructure, ConstructionError> {
    if phi.source() != g.space() {
        return Err(ConstructionError::SourceMismatch);
    }
    if let Some(l) = overlap(phi.source(), phi.target()) {
        return Err(ConstructionError::Overlap(l));
    }
    require(coalgebra::check(g, "achiral", &[("Delta", "Delta"), ("Delta_tilde", "Delta_tilde")])?)?;
    let d1 = g.get("Delta")?;
    let dt1 = g.get("Delta_tilde")?;
    let d2 = phi.transport(d1);
    let dt2_up = phi.transport(dt1);
    let dt2 = match transport {
        Transport::Tilde => dt2_up.clone(),
        Transport::Plain => d2.clone(),
    };
    let space = phi.source().union(phi.target());
    let mut rows = Rows::new(&space);
    for l in phi.source().labels() {
        let v = d1.at(l);
        let w = dt1.at(l);
        let y = phi.forward(l);
        rows.put("Delta_star", l, v.clone())?;
        rows.put("delta1", l, v.clone())?;
        rows.put("Delta_up", l, v)?;
        rows.put("Delta_tilde_up", l, w)?;
        rows.put("delta2_tilde", l, phi.pull_at(&dt2.apply(&y), 1))?;
        rows.put("delta2_tilde_hat", l, phi.pull_at(&dt2_up.apply(&y), 0))?;
    }
    for y in phi.target().labels() {
        let v = d1.apply(&phi.inverse(y));
        rows.put("Delta_star", y, dt2.at(y))?;
        rows.put("delta1", y, phi.push_at(&v, 1))?;
        rows.put("delta2_tilde", y, dt2.at(y))?;
        rows.put("Delta_up", y, d2.at(y))?;
        rows.put("Delta_tilde_up", y, dt2_up.at(y))?;
        rows.put("delta2_tilde_hat", y, dt2_up.at(y))?;
    }
    Ok(EntangledStructure::new(rows.finish(), phi.clone(), Chirality::Achiral, "Delta_star")
        .bridge("delta1", Boundary::C1, "Delta_star")
        .bridge("delta2_tilde", Boundary::C2, "Delta_star")
        .bridge("delta2_tilde_hat", Boundary::C2, "Delta_tilde_up"))
}

/// One codipterous input of [`sum_codipterous`]: maps on the ambient space
/// and the labels on which they are taken.
#[derive(Clone, Debug)]
pub struct CodipterousPart {
    pub delta: MultiLinearMap,
    pub bridge: MultiLinearMap,
    pub domain: Vec<Label>,
}

/// Glues two codipterous structures with disjoint domains into
/// `Delta_star`, `delta_star` on `space`.
pub fn sum_codipterous(space: &BasisSpace, parts: [&CodipterousPart; 2]) -> Result<LStructure, ConstructionError> {
    let seen: BTreeSet<&Label> = parts[0].domain.iter().collect();
    if let Some(l) = parts[1].domain.iter().find(|l| seen.contains(l)) {
        return Err(ConstructionError::Overlap(l.clone()));
    }
    let mut delta = Vec::new();
    let mut bridge = Vec::new();
    for p in parts {
        if p.delta.space() != space || p.bridge.space() != space {
            return Err(ConstructionError::SourceMismatch);
        }
        let b = Bound::maps(Axiom::Codipterous, &[("Delta", &p.delta), ("delta", &p.bridge)], &[])?;
        require(b.check(Axiom::Codipterous, &p.domain))?;
        for l in &p.domain {
            delta.push((l.clone(), p.delta.at(l)));
            bridge.push((l.clone(), p.bridge.at(l)));
        }
    }
    Ok(LStructure::new(space.clone())
        .with_coproduct("Delta_star", glue(space, delta))?
        .with_coproduct("delta_star", glue(space, bridge))?)
}

/// The dendriform pair of a self-entanglement: `delta_d` is the bridge
/// `delta1`, `delta_d_hat` is `(Φ⊗id)Δ₁Φ⁻¹` on C2 and zero on C1.
pub fn self_tiling_dendriform(c1: &LStructure, phi: &ChannelMap) -> Result<EntangledStructure, ConstructionError> {
    let mut e = self_entangle(c1, phi)?;
    let space = e.space().clone();
    let hat = e.get("delta1_hat")?.restrict(&phi.target().labels().iter().cloned().collect());
    let d = e.get("delta1")?.clone();
    e.insert("delta_d", d);
    e.insert("delta_d_hat", hat.extend_to(&space).expect("same space"));
    Ok(e.bridge("delta_d", Boundary::C1, "Delta_star"))
}

/// Whether the supports of `a` and `b` tile the support of `a + b`: no arrow
/// lies in both and together they give every arrow of the sum.
pub fn tiling_check(s: &LStructure, a: &str, b: &str) -> Result<AxiomReport, ConstructionError> {
    let ma = s.get(a)?;
    let mb = s.get(b)?;
    let sa = support_of(s.space(), [ma]);
    let sb = support_of(s.space(), [mb]);
    let sum = support_of(s.space(), [&ma.add(mb).expect("same shape")]);
    let mut r = AxiomReport::new("tiling");
    for (u, v, _) in sa.arrows() {
        if sb.has_arrow(u, v) {
            r.fail(Witness { equation: "disjoint".into(), at: format!("{u}->{v}"), lhs: a.into(), rhs: b.into() });
        } else {
            r.record_ok();
        }
    }
    for (u, v, _) in sum.arrows() {
        let covered = sa.has_arrow(u, v) || sb.has_arrow(u, v);
        r.record("union", format!("{u}->{v}"), &covered, &true);
    }
    Ok(r)
}
