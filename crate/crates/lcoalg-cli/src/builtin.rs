//! Built-in fixtures as `.lcoalg` documents (and one edge list).

use lcoalg::coalgebra::{dichotomy_sum, LStructure};
use lcoalg::constructions::{cibils_structures, de_bruijn_codialgebra, ChannelMap, Indexing};
use lcoalg::exactlinalg::{Label, Scalar};
use lcoalg::fixtures;
use lcoalg::graphs::{petersen, UndirectedGraph};

use crate::dsl::{Directive, Document};

pub const NAMES: [&str; 7] = ["F", "slq2", "su2q-coalg", "cibils(n,q)", "debruijn(n)", "petersen", "group(n)"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}` (known: {known})", known = NAMES.join(", "))]
    Unknown(String),
    #[error("fixture `{0}`: {1}")]
    Argument(String, String),
}

fn check(axiom: &str, bindings: &[(&str, &str)]) -> Directive {
    Directive::Check { axiom: axiom.into(), bindings: bindings.iter().map(|(r, n)| (r.to_string(), n.to_string())).collect() }
}

fn entangle(kind: &str) -> Directive {
    Directive::Entangle { kind: kind.into(), channel: Some("Phi".into()) }
}

fn with_channel(space: &str, s: &LStructure, target: &str, phi: &ChannelMap, directives: Vec<Directive>) -> Document {
    let mut d = Document::from_structure(space, s);
    d.add_channel("Phi", space, target, phi);
    d.directives = directives;
    d
}

fn renaming(from: &[Label], to: impl Fn(usize) -> String) -> ChannelMap {
    let pairs: Vec<(String, String)> = from.iter().enumerate().map(|(i, l)| (l.to_string(), to(i))).collect();
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    ChannelMap::renaming(&refs).expect("fresh target labels")
}

/// `name(args)` split into the name and its comma-separated arguments.
fn call(name: &str) -> (&str, Vec<&str>) {
    match name.split_once('(') {
        Some((head, rest)) => (head, rest.trim_end_matches(')').split(',').map(str::trim).collect()),
        None => (name, Vec::new()),
    }
}

fn size(name: &str, arg: Option<&&str>) -> Result<usize, FixtureError> {
    arg.and_then(|a| a.parse().ok())
        .filter(|&n: &usize| n > 0)
        .ok_or_else(|| FixtureError::Argument(name.into(), "expected a positive integer size".into()))
}

fn edge_list(g: &UndirectedGraph) -> String {
    g.edges().map(|(u, v)| format!("{u} -- {v}\n")).collect()
}

/// The text of a built-in fixture.
pub fn fixture_text(name: &str) -> Result<String, FixtureError> {
    let (head, args) = call(name.trim());
    let doc = match (head, args.len()) {
        ("F", 0) => with_channel(
            "F",
            &fixtures::f_with_counit(),
            "G",
            &fixtures::f_channel(),
            vec![check("coassoc", &[("Delta", "Delta")]), check("right_counit", &[("Delta", "Delta"), ("eps", "eps")]), entangle("self")],
        ),
        ("slq2", 0) => with_channel(
            "A",
            &fixtures::slq2(),
            "B",
            &fixtures::slq2_channel(),
            vec![check("coassoc", &[("Delta", "Delta")]), entangle("achiral")],
        ),
        ("su2q-coalg", 0) => with_channel(
            "A",
            &fixtures::su2q(),
            "B",
            &fixtures::su2q_channel(),
            vec![check("achiral", &[("Delta", "Delta"), ("Delta_tilde", "Delta_tilde")]), entangle("achiral")],
        ),
        ("cibils", 2) => {
            let n = size(name, args.first())?;
            let q: Scalar = args[1].parse().map_err(|e| FixtureError::Argument(name.into(), format!("{e}")))?;
            let c = cibils_structures(n, &q, Indexing::Truncated).map_err(|e| FixtureError::Argument(name.into(), e.to_string()))?;
            let dend = &c.dendriform;
            let sum = dichotomy_sum(dend, "delta", "delta_hat").expect("both present");
            let mut s = c.codialgebra.clone();
            for (role, m) in
                [("dend_delta", dend.get("delta").unwrap()), ("dend_delta_hat", dend.get("delta_hat").unwrap()), ("dend_sum", &sum)]
            {
                s = s.with_coproduct(role, m.clone()).expect("fresh name");
            }
            let mut d = Document::from_structure("A", &s);
            if let Some(phi) = &c.channel {
                d.add_channel("Phi", "A0", "X0", phi);
            }
            d.directives = vec![
                check("codialgebra", &[("delta", "delta"), ("delta_hat", "delta_hat")]),
                check("dendriform_coalgebra", &[("delta", "dend_delta"), ("delta_hat", "dend_delta_hat")]),
                check("coassoc", &[("Delta", "dend_sum")]),
                check("right_counit", &[("Delta", "delta_hat"), ("eps", "eps")]),
            ];
            d
        }
        ("debruijn", 1) => {
            let n = size(name, args.first())?;
            let s = de_bruijn_codialgebra(n).map_err(|e| FixtureError::Argument(name.into(), e.to_string()))?;
            let phi = renaming(s.space().labels(), |i| format!("y{}", i + 1));
            with_channel(
                "X",
                &s,
                "Y",
                &phi,
                vec![check("codialgebra", &[("delta", "Delta_tilde"), ("delta_hat", "Delta")]), entangle("debruijn")],
            )
        }
        ("group", 1) => {
            let n = size(name, args.first())?;
            let s = fixtures::cyclic_group(n);
            let phi = renaming(s.space().labels(), |i| format!("h{i}"));
            with_channel("G", &s, "H", &phi, vec![check("coassoc", &[("Delta", "Delta")]), entangle("flower")])
        }
        ("petersen", 0) => return Ok(edge_list(&petersen())),
        _ => return Err(FixtureError::Unknown(name.into())),
    };
    Ok(doc.to_string())
}
