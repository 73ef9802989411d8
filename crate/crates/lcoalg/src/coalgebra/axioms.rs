//! The axiom catalogue as data: each axiom is a list of equations between
//! expressions over role names, evaluated on every basis label.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exactlinalg::{Label, LinearForm, MultiLinearMap, TensorVec};

use super::{AxiomReport, LStructure};

/// Every axiom system known to [`check_axiom`](super::check_axiom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Coassoc,
    Entanglement,
    RightCounit,
    LeftCounit,
    LCocommutative,
    Bidirected,
    Codipterous,
    AntiCodipterous,
    PreDendriform,
    DendriformCoalgebra,
    Codialgebra,
    Cotrialgebra,
    Achiral,
}

/// Whether a role is filled by a coproduct or by a counit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoleKind {
    Coproduct,
    Counit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Role {
    pub name: &'static str,
    pub kind: RoleKind,
}

const fn cop(name: &'static str) -> Role {
    Role { name, kind: RoleKind::Coproduct }
}

const fn form(name: &'static str) -> Role {
    Role { name, kind: RoleKind::Counit }
}

/// An expression `V → V^{⊗k}` built from bound roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Identity,
    /// A sum of coproducts.
    Cop(Vec<&'static str>),
    /// `(outer at slot) ∘ inner`, both sums of coproducts.
    Then {
        inner: Vec<&'static str>,
        slot: usize,
        outer: Vec<&'static str>,
    },
    /// `τ ∘ inner`.
    Twist(Vec<&'static str>),
    /// Contraction of factor `slot` of `inner` with a counit.
    Counit {
        inner: &'static str,
        slot: usize,
        counit: &'static str,
    },
}

/// A named equation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

fn eq(name: &str, lhs: Expr, rhs: Expr) -> Equation {
    Equation { name: name.to_string(), lhs, rhs }
}

/// `(A⊗id)B`
fn left(a: &[&'static str], b: &[&'static str]) -> Expr {
    Expr::Then { inner: b.to_vec(), slot: 0, outer: a.to_vec() }
}

/// `(id⊗A)B`
fn right(a: &[&'static str], b: &[&'static str]) -> Expr {
    Expr::Then { inner: b.to_vec(), slot: 1, outer: a.to_vec() }
}

fn coassoc_of(name: &str, r: &'static str) -> Equation {
    eq(name, left(&[r], &[r]), right(&[r], &[r]))
}

const D: &str = "Delta";
const DT: &str = "Delta_tilde";
const S: &str = "delta";
const SH: &str = "delta_hat";

impl Axiom {
    pub const ALL: [Axiom; 13] = [
        Axiom::Coassoc,
        Axiom::Entanglement,
        Axiom::RightCounit,
        Axiom::LeftCounit,
        Axiom::LCocommutative,
        Axiom::Bidirected,
        Axiom::Codipterous,
        Axiom::AntiCodipterous,
        Axiom::PreDendriform,
        Axiom::DendriformCoalgebra,
        Axiom::Codialgebra,
        Axiom::Cotrialgebra,
        Axiom::Achiral,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::Coassoc => "coassoc",
            Axiom::Entanglement => "entanglement",
            Axiom::RightCounit => "right_counit",
            Axiom::LeftCounit => "left_counit",
            Axiom::LCocommutative => "L_cocommutative",
            Axiom::Bidirected => "bidirected",
            Axiom::Codipterous => "codipterous",
            Axiom::AntiCodipterous => "anti_codipterous",
            Axiom::PreDendriform => "pre_dendriform",
            Axiom::DendriformCoalgebra => "dendriform_coalgebra",
            Axiom::Codialgebra => "codialgebra",
            Axiom::Cotrialgebra => "cotrialgebra",
            Axiom::Achiral => "achiral",
        }
    }

    pub fn roles(self) -> Vec<Role> {
        match self {
            Axiom::Coassoc => vec![cop(D)],
            Axiom::Entanglement => vec![cop(DT), cop(D)],
            Axiom::RightCounit => vec![cop(D), form("eps")],
            Axiom::LeftCounit => vec![cop(DT), form("eps_tilde")],
            Axiom::LCocommutative | Axiom::Bidirected | Axiom::Achiral => vec![cop(D), cop(DT)],
            Axiom::Codipterous => vec![cop(D), cop(S)],
            Axiom::AntiCodipterous => vec![cop(D), cop(SH)],
            Axiom::PreDendriform | Axiom::Cotrialgebra => vec![cop(D), cop(S), cop(SH)],
            Axiom::DendriformCoalgebra | Axiom::Codialgebra => vec![cop(S), cop(SH)],
        }
    }

    pub fn equations(self) -> Vec<Equation> {
        match self {
            Axiom::Coassoc => vec![coassoc_of("coas", D)],
            Axiom::Entanglement => vec![eq("entanglement", left(&[DT], &[D]), right(&[D], &[DT]))],
            Axiom::RightCounit => vec![eq("right_counit", Expr::Counit { inner: D, slot: 1, counit: "eps" }, Expr::Identity)],
            Axiom::LeftCounit => vec![eq("left_counit", Expr::Counit { inner: DT, slot: 0, counit: "eps_tilde" }, Expr::Identity)],
            Axiom::LCocommutative | Axiom::Bidirected => {
                vec![eq("flip", Expr::Cop(vec![D]), Expr::Twist(vec![DT]))]
            }
            Axiom::Codipterous => vec![coassoc_of("coas", D), codip()],
            Axiom::AntiCodipterous => vec![coassoc_of("coas", D), anticodip()],
            Axiom::PreDendriform => {
                vec![coassoc_of("coas", D), codip(), anticodip(), eq("entanglement", right(&[SH], &[S]), left(&[S], &[SH]))]
            }
            Axiom::DendriformCoalgebra => vec![
                eq("dend.1", right(&[S, SH], &[SH]), left(&[SH], &[SH])),
                eq("dend.2", right(&[SH], &[S]), left(&[S], &[SH])),
                eq("dend.3", left(&[SH, S], &[S]), right(&[S], &[S])),
            ],
            Axiom::Codialgebra => codialgebra("codi"),
            Axiom::Cotrialgebra => {
                let mut v = vec![coassoc_of("cotri.1", D)];
                v.extend(codialgebra("cotri.2"));
                v.extend([
                    eq("cotri.3", left(&[SH], &[SH]), right(&[D], &[SH])),
                    eq("cotri.4", left(&[D], &[SH]), right(&[SH], &[D])),
                    eq("cotri.5", left(&[SH], &[D]), right(&[S], &[D])),
                    eq("cotri.6", left(&[S], &[D]), right(&[D], &[S])),
                    eq("cotri.7", left(&[D], &[S]), right(&[S], &[S])),
                ]);
                v
            }
            Axiom::Achiral => {
                vec![eq("achiral.1", left(&[D], &[DT]), right(&[DT], &[D])), eq("achiral.2", right(&[D], &[DT]), left(&[DT], &[D]))]
            }
        }
    }
}

fn codip() -> Equation {
    eq("codip", left(&[D], &[S]), right(&[S], &[S]))
}

fn anticodip() -> Equation {
    eq("anticodip", right(&[D], &[SH]), left(&[SH], &[SH]))
}

fn codialgebra(prefix: &str) -> Vec<Equation> {
    vec![
        coassoc_of(&format!("{prefix}.1a"), S),
        coassoc_of(&format!("{prefix}.1b"), SH),
        eq(&format!("{prefix}.2"), right(&[SH], &[SH]), right(&[S], &[SH])),
        eq(&format!("{prefix}.3"), left(&[S], &[S]), left(&[SH], &[S])),
        eq(&format!("{prefix}.4"), left(&[S], &[SH]), right(&[SH], &[S])),
    ]
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// An axiom identifier that is not in the catalogue.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom `{0}`")]
pub struct UnknownAxiom(pub String);

impl FromStr for Axiom {
    type Err = UnknownAxiom;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL.into_iter().find(|a| a.id() == s).ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

/// Errors raised before evaluation starts.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    UnknownAxiom(#[from] UnknownAxiom),
    #[error("no binding for role `{0}`")]
    MissingBinding(String),
    #[error("no coproduct named `{0}`")]
    UnknownCoproduct(String),
    #[error("no counit named `{0}`")]
    UnknownCounit(String),
}

/// Concrete maps and forms standing in for the roles of an axiom.
#[derive(Default, Clone)]
pub struct Bound<'a> {
    maps: BTreeMap<&'static str, &'a MultiLinearMap>,
    forms: BTreeMap<&'static str, &'a LinearForm>,
    names: BTreeMap<&'static str, String>,
}

impl<'a> Bound<'a> {
    /// Resolves `bindings` (role → name) against a structure.
    pub fn resolve(axiom: Axiom, s: &'a LStructure, bindings: &BTreeMap<String, String>) -> Result<Self, CheckError> {
        let mut b = Bound::default();
        for role in axiom.roles() {
            let name = bindings.get(role.name).ok_or_else(|| CheckError::MissingBinding(role.name.to_string()))?;
            match role.kind {
                RoleKind::Coproduct => {
                    let m = s.coproduct(name).ok_or_else(|| CheckError::UnknownCoproduct(name.clone()))?;
                    b.maps.insert(role.name, m);
                }
                RoleKind::Counit => {
                    let f = s.counit(name).ok_or_else(|| CheckError::UnknownCounit(name.clone()))?;
                    b.forms.insert(role.name, f);
                }
            }
            b.names.insert(role.name, name.clone());
        }
        Ok(b)
    }

    /// Binds maps directly, with their display names.
    pub fn maps(axiom: Axiom, maps: &[(&str, &'a MultiLinearMap)], forms: &[(&str, &'a LinearForm)]) -> Result<Self, CheckError> {
        let mut b = Bound::default();
        for role in axiom.roles() {
            match role.kind {
                RoleKind::Coproduct => {
                    let (_, m) =
                        maps.iter().find(|(r, _)| *r == role.name).ok_or_else(|| CheckError::MissingBinding(role.name.to_string()))?;
                    b.maps.insert(role.name, m);
                }
                RoleKind::Counit => {
                    let (_, f) =
                        forms.iter().find(|(r, _)| *r == role.name).ok_or_else(|| CheckError::MissingBinding(role.name.to_string()))?;
                    b.forms.insert(role.name, f);
                }
            }
            b.names.insert(role.name, role.name.to_string());
        }
        Ok(b)
    }

    fn map(&self, role: &str) -> &'a MultiLinearMap {
        self.maps[role]
    }

    fn sum_apply(&self, roles: &[&'static str], v: &TensorVec, slot: usize) -> TensorVec {
        let mut out = TensorVec::zero();
        for r in roles {
            out.add_scaled(&self.map(r).apply_at(v, slot), &crate::exactlinalg::Scalar::one());
        }
        out
    }

    /// Evaluates an expression on a basis label.
    pub fn eval(&self, e: &Expr, l: &Label) -> TensorVec {
        let v = TensorVec::label(l);
        match e {
            Expr::Identity => v,
            Expr::Cop(rs) => self.sum_apply(rs, &v, 0),
            Expr::Then { inner, slot, outer } => {
                let first = self.sum_apply(inner, &v, 0);
                self.sum_apply(outer, &first, *slot)
            }
            Expr::Twist(rs) => self.sum_apply(rs, &v, 0).permute(&[1, 0]),
            Expr::Counit { inner, slot, counit } => self.forms[counit].contract(&self.map(inner).apply(&v), *slot),
        }
    }

    fn name(&self, role: &str) -> String {
        self.names.get(role).cloned().unwrap_or_else(|| role.to_string())
    }

    fn sum_name(&self, rs: &[&'static str]) -> String {
        let parts: Vec<String> = rs.iter().map(|r| self.name(r)).collect();
        if parts.len() == 1 {
            parts[0].clone()
        } else {
            format!("({})", parts.join("+"))
        }
    }

    /// Renders an expression with role names replaced by bound names.
    pub fn render(&self, e: &Expr) -> String {
        match e {
            Expr::Identity => "id".into(),
            Expr::Cop(rs) => self.sum_name(rs),
            Expr::Then { inner, slot: 0, outer } => format!("({}⊗id){}", self.sum_name(outer), self.sum_name(inner)),
            Expr::Then { inner, outer, .. } => format!("(id⊗{}){}", self.sum_name(outer), self.sum_name(inner)),
            Expr::Twist(rs) => format!("τ{}", self.sum_name(rs)),
            Expr::Counit { inner, slot: 0, counit } => format!("({}⊗id){}", self.name(counit), self.name(inner)),
            Expr::Counit { inner, counit, .. } => format!("(id⊗{}){}", self.name(counit), self.name(inner)),
        }
    }

    /// Evaluates every equation of `axiom` on each label in `labels`.
    pub fn check(&self, axiom: Axiom, labels: &[Label]) -> AxiomReport {
        let mut report = AxiomReport::new(axiom.id()).with_bindings(self.names.iter().map(|(k, v)| (k.to_string(), v.clone())));
        for e in axiom.equations() {
            let title = format!("{}: {} = {}", e.name, self.render(&e.lhs), self.render(&e.rhs));
            for l in labels {
                let lhs = self.eval(&e.lhs, l);
                let rhs = self.eval(&e.rhs, l);
                report.record(&title, l, &lhs, &rhs);
            }
        }
        report
    }
}
