//! Channel maps, bridges and the entanglement constructions built from them.

mod channel;
mod cibils;
mod entangle;
mod ito;
mod markov;

use std::collections::BTreeSet;

pub use channel::{channel_map, map_slot, ChannelError, ChannelMap};
pub use cibils::{cibils_structures, CibilsStructures, Indexing};
pub use entangle::{
    achiral_entangle, fixed_point_check, self_entangle, self_entangle_fixed, self_tiling_dendriform, sum_codipterous, tiling_check,
    CodipterousPart, Transport,
};
pub use ito::{bridge_homomorphism, ito_pair, ito_pair_with, ito_property, leibniz_coderivative, Coderivative, ItoPair};
pub use markov::{de_bruijn_codialgebra, de_bruijn_codialgebra_on, flower_structure, markov_entangle, MarkovKind};

use crate::coalgebra::{self, AxiomReport, CheckError, LStructure, StructureError};
use crate::exactlinalg::{BasisSpace, FiniteAlgebra, Label, MultiLinearMap, TensorVec};

/// Why a construction refused its inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("label `{0}` lies in both boundary components")]
    Overlap(Label),
    #[error("the channel source is not the basis of the input")]
    SourceMismatch,
    #[error("{}", precondition(.0))]
    Precondition(Box<AxiomReport>),
    #[error("fixed label `{0}`: the two definitions of `{1}` disagree")]
    FixedPoint(Label, String),
    #[error("the index range must be non-empty")]
    EmptyIndex,
    #[error("the parameter must be nonzero")]
    ZeroParameter,
    #[error("the algebra does not contain label `{0}`")]
    AlgebraLabel(Label),
    #[error("no algebra attached")]
    NoAlgebra,
}

fn precondition(r: &AxiomReport) -> String {
    match r.witnesses().first() {
        Some(w) => format!("input fails {}: {} at {}", r.axiom(), w.equation, w.at),
        None => format!("input fails {}", r.axiom()),
    }
}

/// Runs a check and turns a failing report into a precondition error.
pub(crate) fn require(r: AxiomReport) -> Result<(), ConstructionError> {
    if r.passed() {
        Ok(())
    } else {
        Err(ConstructionError::Precondition(Box::new(r)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Chiral,
    Achiral,
}

/// One of the two boundary components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    C1,
    C2,
}

/// A bridge together with the boundary on which it must coincide with a
/// glued coproduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bridge {
    pub name: String,
    pub home: Boundary,
    pub agrees_with: String,
}

/// The output of an entanglement: an ambient structure on `C1 ∪ C2` holding
/// the glued coproduct and the bridges.
#[derive(Clone, Debug)]
pub struct EntangledStructure {
    structure: LStructure,
    c1: BasisSpace,
    c2: BasisSpace,
    channel: ChannelMap,
    chirality: Chirality,
    glued: String,
    bridges: Vec<Bridge>,
    algebra: Option<FiniteAlgebra>,
}

impl EntangledStructure {
    pub(crate) fn new(structure: LStructure, channel: ChannelMap, chirality: Chirality, glued: &str) -> Self {
        EntangledStructure {
            structure,
            c1: channel.source().clone(),
            c2: channel.target().clone(),
            channel,
            chirality,
            glued: glued.to_string(),
            bridges: Vec::new(),
            algebra: None,
        }
    }

    pub(crate) fn bridge(mut self, name: &str, home: Boundary, agrees_with: &str) -> Self {
        self.bridges.push(Bridge { name: name.into(), home, agrees_with: agrees_with.into() });
        self
    }

    pub fn structure(&self) -> &LStructure {
        &self.structure
    }

    pub fn space(&self) -> &BasisSpace {
        self.structure.space()
    }

    pub fn c1(&self) -> &BasisSpace {
        &self.c1
    }

    pub fn c2(&self) -> &BasisSpace {
        &self.c2
    }

    pub fn boundary(&self, b: Boundary) -> &BasisSpace {
        match b {
            Boundary::C1 => &self.c1,
            Boundary::C2 => &self.c2,
        }
    }

    pub fn channel(&self) -> &ChannelMap {
        &self.channel
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    /// Name of the glued coproduct `Δ*`.
    pub fn glued_name(&self) -> &str {
        &self.glued
    }

    pub fn glued(&self) -> &MultiLinearMap {
        self.structure.get(&self.glued).expect("glued coproduct is stored")
    }

    pub fn bridges(&self) -> &[Bridge] {
        &self.bridges
    }

    pub fn get(&self, name: &str) -> Result<&MultiLinearMap, StructureError> {
        self.structure.get(name)
    }

    pub fn algebra(&self) -> Option<&FiniteAlgebra> {
        self.algebra.as_ref()
    }

    /// Attaches a product. Its basis may be larger than the ambient space but
    /// must contain every ambient label.
    pub fn with_algebra(mut self, a: FiniteAlgebra) -> Result<Self, ConstructionError> {
        if let Some(l) = self.space().labels().iter().find(|l| !a.space().contains(l)) {
            return Err(ConstructionError::AlgebraLabel(l.clone()));
        }
        self.algebra = Some(a);
        Ok(self)
    }

    /// Checks an axiom on the ambient structure with role bindings.
    pub fn check(&self, axiom: &str, pairs: &[(&str, &str)]) -> Result<AxiomReport, CheckError> {
        coalgebra::check(&self.structure, axiom, pairs)
    }

    /// The boundary invariant: each bridge equals its glued coproduct on its
    /// home component.
    pub fn check_boundary(&self) -> AxiomReport {
        let mut r = AxiomReport::new("boundary");
        for b in &self.bridges {
            let (Ok(d), Ok(g)) = (self.get(&b.name), self.get(&b.agrees_with)) else {
                r.fail(crate::coalgebra::Witness {
                    equation: format!("{} = {}", b.name, b.agrees_with),
                    at: "*".into(),
                    lhs: "missing".into(),
                    rhs: "missing".into(),
                });
                continue;
            };
            let eq = format!("{} = {} on {:?}", b.name, b.agrees_with, b.home);
            for l in self.boundary(b.home).labels() {
                r.record(&eq, l, &d.at(l), &g.at(l));
            }
        }
        r
    }

    pub(crate) fn insert(&mut self, name: &str, m: MultiLinearMap) {
        self.structure.insert_coproduct(name, m).expect("ambient coproduct");
    }
}

/// The first label of `b` also in `a`.
pub(crate) fn overlap(a: &BasisSpace, b: &BasisSpace) -> Option<Label> {
    let set: BTreeSet<&Label> = a.labels().iter().collect();
    b.labels().iter().find(|l| set.contains(l)).cloned()
}

/// A coproduct on `space` from explicit rows.
pub(crate) fn glue<I: IntoIterator<Item = (Label, TensorVec)>>(space: &BasisSpace, rows: I) -> MultiLinearMap {
    MultiLinearMap::coproduct(space, rows).expect("rows lie in the ambient space")
}
