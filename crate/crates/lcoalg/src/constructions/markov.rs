//! De Bruijn codialgebras, flower structures and their entanglement with a
//! coalgebra.

use super::{glue, overlap, Boundary, ChannelMap, Chirality, ConstructionError, EntangledStructure};
use crate::coalgebra::LStructure;
use crate::exactlinalg::{BasisSpace, Label, TensorVec};
use crate::graphs::{de_bruijn_graph, de_bruijn_on, markov_coalgebra};

/// The `(n,1)` De Bruijn codialgebra on `x1 … xn`: `Delta` is
/// `x_i ↦ x_i⊗Σx` and `Delta_tilde` is `x_i ↦ Σx⊗x_i`.
pub fn de_bruijn_codialgebra(n: usize) -> Result<LStructure, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyIndex);
    }
    let g = de_bruijn_graph(n).expect("n ≥ 1");
    Ok(markov_coalgebra(&g).expect("non-empty graph"))
}

/// [`de_bruijn_codialgebra`] on the given labels.
pub fn de_bruijn_codialgebra_on(labels: &[Label]) -> Result<LStructure, ConstructionError> {
    let g = de_bruijn_on(labels).map_err(|_| ConstructionError::EmptyIndex)?;
    Ok(markov_coalgebra(&g).expect("non-empty graph"))
}

/// The flower coproducts of a unital algebra basis: `Delta` is
/// `a ↦ a⊗1` and `Delta_tilde` is `a ↦ 1⊗a`.
pub fn flower_structure(space: &BasisSpace, unit: &Label) -> Result<LStructure, ConstructionError> {
    if !space.contains(unit) {
        return Err(ConstructionError::AlgebraLabel(unit.clone()));
    }
    let pair = |x: &Label, y: &Label| TensorVec::basis(vec![x.clone(), y.clone()]);
    let right = glue(space, space.labels().iter().map(|a| (a.clone(), pair(a, unit))));
    let left = glue(space, space.labels().iter().map(|a| (a.clone(), pair(unit, a))));
    Ok(LStructure::new(space.clone()).with_coproduct("Delta", right)?.with_coproduct("Delta_tilde", left)?)
}

/// Which Markov structure sits on the G side of [`markov_entangle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkovKind {
    DeBruijn,
    /// A flower structure with the given unit label.
    Flower {
        unit: Label,
    },
}

/// Entangles a Markov structure `g` (`Delta`, `Delta_tilde`) with a
/// coalgebra `c` (`Delta`) through `Φ: G → C`.
///
/// De Bruijn case: `delta_M` and `delta_M_tilde` extend `Δ_M` and `Δ̃_M` to
/// C by `(id⊗Φ)(−)Φ⁻¹`; `delta` extends `Δ_C` to G by `(id⊗Φ⁻¹)Δ_CΦ`;
/// `Delta_star` is `Δ_M + Δ_C` and `Delta_up` is `Δ̃_M + Δ_C`.
///
/// Flower case: `delta_f_tilde(c) = 1⊗c` and `delta_f(c) = Φ⁻¹c⊗Φ(1)` on C,
/// `delta` as above, and `Delta_star` is `δ_f + δ̃_f` on G and `Δ_C` on C.
pub fn markov_entangle(
    g: &LStructure,
    c: &LStructure,
    phi: &ChannelMap,
    kind: MarkovKind,
) -> Result<EntangledStructure, ConstructionError> {
    if phi.source() != g.space() || phi.target() != c.space() {
        return Err(ConstructionError::SourceMismatch);
    }
    if let Some(l) = overlap(g.space(), c.space()) {
        return Err(ConstructionError::Overlap(l));
    }
    let dm = g.get("Delta")?;
    let dmt = g.get("Delta_tilde")?;
    let dc = c.get("Delta")?;
    let space = g.space().union(c.space());
    let gl = g.space().labels();
    let cl = c.space().labels();
    let delta = glue(
        &space,
        gl.iter().map(|x| (x.clone(), phi.pull_at(&dc.apply(&phi.forward(x)), 1))).chain(cl.iter().map(|y| (y.clone(), dc.at(y)))),
    );
    let mut s = LStructure::new(space.clone()).with_coproduct("delta", delta)?;
    match kind {
        MarkovKind::DeBruijn => {
            let extend = |m: &crate::exactlinalg::MultiLinearMap| {
                glue(
                    &space,
                    gl.iter()
                        .map(|x| (x.clone(), m.at(x)))
                        .chain(cl.iter().map(|y| (y.clone(), phi.push_at(&m.apply(&phi.inverse(y)), 1)))),
                )
            };
            s.insert_coproduct("delta_M", extend(dm))?;
            s.insert_coproduct("delta_M_tilde", extend(dmt))?;
            let glued = |m: &crate::exactlinalg::MultiLinearMap| {
                glue(&space, gl.iter().map(|x| (x.clone(), m.at(x))).chain(cl.iter().map(|y| (y.clone(), dc.at(y)))))
            };
            s.insert_coproduct("Delta_star", glued(dm))?;
            s.insert_coproduct("Delta_up", glued(dmt))?;
            Ok(EntangledStructure::new(s, phi.clone(), Chirality::Chiral, "Delta_star")
                .bridge("delta_M", Boundary::C1, "Delta_star")
                .bridge("delta_M_tilde", Boundary::C1, "Delta_up")
                .bridge("delta", Boundary::C2, "Delta_star"))
        }
        MarkovKind::Flower { unit } => {
            if !g.space().contains(&unit) {
                return Err(ConstructionError::AlgebraLabel(unit));
            }
            let one_c = phi.forward(&unit);
            let unit_v = TensorVec::label(&unit);
            let df =
                glue(&space, gl.iter().map(|x| (x.clone(), dm.at(x))).chain(cl.iter().map(|y| (y.clone(), phi.inverse(y).tensor(&one_c)))));
            let dft = glue(
                &space,
                gl.iter().map(|x| (x.clone(), dmt.at(x))).chain(cl.iter().map(|y| (y.clone(), unit_v.tensor(&TensorVec::label(y))))),
            );
            let star = glue(&space, gl.iter().map(|x| (x.clone(), &dm.at(x) + &dmt.at(x))).chain(cl.iter().map(|y| (y.clone(), dc.at(y)))));
            s.insert_coproduct("delta_f", df)?;
            s.insert_coproduct("delta_f_tilde", dft)?;
            s.insert_coproduct("Delta_star", star)?;
            Ok(EntangledStructure::new(s, phi.clone(), Chirality::Chiral, "Delta_star").bridge("delta", Boundary::C2, "Delta_star"))
        }
    }
}
