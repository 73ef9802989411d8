//! The `.lcoalg` description language: spaces, coproducts, counits,
//! algebras and channels given as weighted tensor lists, plus check and
//! entangle directives.

mod parse;

use std::fmt::{self, Write};

use lcoalg::coalgebra::{LStructure, StructureError};
use lcoalg::constructions::{ChannelError, ChannelMap};
use lcoalg::exactlinalg::{AlgebraError, BasisSpace, FiniteAlgebra, Label, LinearForm, MapError, MultiLinearMap, Scalar, TensorVec};

pub use parse::parse_lcoalg;

pub const ENTANGLE_KINDS: [&str; 5] = ["self", "achiral", "debruijn", "flower", "tiling"];

/// A parse failure, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        match self.expected.as_slice() {
            [] => Ok(()),
            [one] => write!(f, " (expected {one})"),
            many => write!(f, " (expected one of {})", many.join(", ")),
        }
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDecl {
    pub name: String,
    pub labels: Vec<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductDecl {
    pub name: String,
    pub space: String,
    pub rows: Vec<(Label, TensorVec)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounitDecl {
    pub name: String,
    pub space: String,
    pub values: Vec<(Label, Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDecl {
    pub name: String,
    pub space: String,
    pub products: Vec<((Label, Label), TensorVec)>,
    pub unit: TensorVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub rows: Vec<(Label, TensorVec)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Directive {
    /// `check AXIOM role=name, …`
    Check { axiom: String, bindings: Vec<(String, String)> },
    /// `entangle KIND [using CHANNEL]`
    Entangle { kind: String, channel: Option<String> },
}

/// A parsed `.lcoalg` file. Names are resolved at parse time; the library
/// objects are built on demand.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub spaces: Vec<SpaceDecl>,
    pub coproducts: Vec<CoproductDecl>,
    pub counits: Vec<CounitDecl>,
    pub algebras: Vec<AlgebraDecl>,
    pub channels: Vec<ChannelDecl>,
    pub directives: Vec<Directive>,
}

/// Failure to turn a parsed document into library objects.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("no space named `{0}`")]
    UnknownSpace(String),
    #[error("no channel named `{0}`")]
    UnknownChannel(String),
    #[error("the document declares no coproduct")]
    Empty,
    #[error("coproduct `{0}`: {1}")]
    Map(String, MapError),
    #[error("algebra `{0}`: {1}")]
    Algebra(String, AlgebraError),
    #[error("channel `{0}`: {1}")]
    Channel(String, ChannelError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl Document {
    pub fn space(&self, name: &str) -> Result<BasisSpace, DocumentError> {
        self.spaces.iter().find(|s| s.name == name).map(parse::basis).ok_or_else(|| DocumentError::UnknownSpace(name.into()))
    }

    /// The space carrying the first coproduct.
    pub fn default_space(&self) -> Result<&str, DocumentError> {
        self.coproducts.first().map(|c| c.space.as_str()).ok_or(DocumentError::Empty)
    }

    /// Every coproduct, counit and algebra declared on `space`.
    pub fn structure(&self, space: &str) -> Result<LStructure, DocumentError> {
        let basis = self.space(space)?;
        let mut s = LStructure::new(basis.clone());
        for c in self.coproducts.iter().filter(|c| c.space == space) {
            let m = MultiLinearMap::coproduct(&basis, c.rows.iter().cloned()).map_err(|e| DocumentError::Map(c.name.clone(), e))?;
            s = s.with_coproduct(&c.name, m)?;
        }
        for c in self.counits.iter().filter(|c| c.space == space) {
            s = s.with_counit(&c.name, LinearForm::from_values(c.values.iter().cloned()))?;
        }
        if let Some(a) = self.algebras.iter().find(|a| a.space == space) {
            let alg = FiniteAlgebra::new(basis, a.products.iter().cloned(), a.unit.clone())
                .map_err(|e| DocumentError::Algebra(a.name.clone(), e))?;
            s = s.with_algebra(alg)?;
        }
        Ok(s)
    }

    pub fn channel(&self, name: &str) -> Result<ChannelMap, DocumentError> {
        let c = self.channels.iter().find(|c| c.name == name).ok_or_else(|| DocumentError::UnknownChannel(name.into()))?;
        ChannelMap::new(self.space(&c.source)?, self.space(&c.target)?, c.rows.iter().cloned())
            .map_err(|e| DocumentError::Channel(c.name.clone(), e))
    }

    /// Channels leaving `space`, in declaration order.
    pub fn channels_from<'a>(&'a self, space: &'a str) -> impl Iterator<Item = &'a ChannelDecl> + 'a {
        self.channels.iter().filter(move |c| c.source == space)
    }

    pub fn add_space(&mut self, name: &str, space: &BasisSpace) {
        if !self.spaces.iter().any(|s| s.name == name) {
            self.spaces.push(SpaceDecl { name: name.into(), labels: space.labels().to_vec() });
        }
    }

    /// Declares `space` and everything `s` carries on it.
    pub fn add_structure(&mut self, space: &str, s: &LStructure) {
        self.add_space(space, s.space());
        let labels = s.space().labels();
        for (name, m) in s.coproducts() {
            let rows = labels.iter().map(|l| (l.clone(), m.at(l))).filter(|(_, v)| !v.is_zero()).collect();
            self.coproducts.push(CoproductDecl { name: name.clone(), space: space.into(), rows });
        }
        for (name, f) in s.counits() {
            let values = labels.iter().map(|l| (l.clone(), f.value(l))).filter(|(_, c)| !c.is_zero()).collect();
            self.counits.push(CounitDecl { name: name.clone(), space: space.into(), values });
        }
        if let Some(a) = s.algebra() {
            let products = a.rows().map(|(k, v)| (k.clone(), v.clone())).collect();
            self.algebras.push(AlgebraDecl { name: "m".into(), space: space.into(), products, unit: a.unit().clone() });
        }
    }

    pub fn add_channel(&mut self, name: &str, source: &str, target: &str, phi: &ChannelMap) {
        self.add_space(source, phi.source());
        self.add_space(target, phi.target());
        let rows = phi.source().labels().iter().map(|l| (l.clone(), phi.forward(l))).collect();
        self.channels.push(ChannelDecl { name: name.into(), source: source.into(), target: target.into(), rows });
    }

    pub fn from_structure(space: &str, s: &LStructure) -> Document {
        let mut d = Document::default();
        d.add_structure(space, s);
        d
    }
}

/// A coefficient that re-parses as one factor.
fn coefficient(c: &Scalar) -> String {
    let s = c.to_string();
    if s.contains([' ', '/', '*']) {
        format!("({s})")
    } else {
        s
    }
}

fn write_terms(out: &mut String, v: &TensorVec) {
    if v.is_zero() {
        out.push('0');
        return;
    }
    for (i, (t, c)) in v.iter().enumerate() {
        let neg = c.is_negative_form() && !c.is_compound();
        let mag = if neg { -c } else { c.clone() };
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        if !mag.is_one() {
            write!(out, "{}*", coefficient(&mag)).unwrap();
        }
        let names: Vec<&str> = t.iter().map(Label::as_str).collect();
        write!(out, "<{}>", names.join(",")).unwrap();
    }
}

impl fmt::Display for Document {
    /// The canonical text: spaces, coproducts, counits, algebras, channels,
    /// directives, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for s in &self.spaces {
            let names: Vec<&str> = s.labels.iter().map(Label::as_str).collect();
            writeln!(out, "space {} = {{ {} }}", s.name, names.join(", ")).unwrap();
        }
        for c in &self.coproducts {
            writeln!(out, "\ncoproduct {} on {}:", c.name, c.space).unwrap();
            for (l, v) in &c.rows {
                write!(out, "  {l} -> ").unwrap();
                write_terms(&mut out, v);
                out.push('\n');
            }
        }
        for c in &self.counits {
            writeln!(out, "\ncounit {} on {}:", c.name, c.space).unwrap();
            for (l, v) in &c.values {
                writeln!(out, "  {l} -> {v}").unwrap();
            }
        }
        for a in &self.algebras {
            writeln!(out, "\nalgebra {} on {}:", a.name, a.space).unwrap();
            for ((x, y), v) in &a.products {
                write!(out, "  {x} * {y} -> ").unwrap();
                write_terms(&mut out, v);
                out.push('\n');
            }
            out.push_str("  unit -> ");
            write_terms(&mut out, &a.unit);
            out.push('\n');
        }
        for c in &self.channels {
            writeln!(out, "\nchannel {} : {} -> {}:", c.name, c.source, c.target).unwrap();
            for (l, v) in &c.rows {
                write!(out, "  {l} -> ").unwrap();
                write_terms(&mut out, v);
                out.push('\n');
            }
        }
        if !self.directives.is_empty() {
            out.push('\n');
        }
        for d in &self.directives {
            match d {
                Directive::Check { axiom, bindings } => {
                    let b: Vec<String> = bindings.iter().map(|(r, n)| format!("{r}={n}")).collect();
                    writeln!(out, "check {axiom} {}", b.join(", ")).unwrap();
                }
                Directive::Entangle { kind, channel: Some(c) } => writeln!(out, "entangle {kind} using {c}").unwrap(),
                Directive::Entangle { kind, channel: None } => writeln!(out, "entangle {kind}").unwrap(),
            }
        }
        f.write_str(out.trim_end_matches(' '))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: &str = "space F = {a,b,c,d}\ncoproduct Delta on F: a -> <a,a> + <b,c>";

    #[test]
    fn one_line_example() {
        let d = parse_lcoalg(F).unwrap();
        assert_eq!(d.spaces.len(), 1);
        assert_eq!(d.coproducts.len(), 1);
        assert_eq!(d.coproducts[0].rows.len(), 1);
        assert_eq!(d.coproducts[0].rows[0].1, TensorVec::of(&[&["a", "a"], &["b", "c"]]));
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse_lcoalg("").unwrap(), Document::default());
        assert_eq!(parse_lcoalg("# nothing\n\n").unwrap(), Document::default());
    }

    #[test]
    fn undeclared_label_is_named() {
        let e = parse_lcoalg("space F = {a,b,c,d}\ncoproduct Delta on F: a -> <a,a> + <b,e>").unwrap_err();
        assert_eq!((e.line, e.column), (2, 39));
        assert!(e.message.contains("`e`"), "{e}");
        assert!(e.expected.contains(&"`d`".to_string()));
    }

    #[test]
    fn arity_and_unknown_names() {
        let e = parse_lcoalg("space F = {a}\ncoproduct D on F:\n  a -> <a,a,a>").unwrap_err();
        assert_eq!((e.line, e.column), (3, 8));
        assert!(e.message.contains("2 tensor factors"));
        let e = parse_lcoalg("coproduct D on G:").unwrap_err();
        assert!(e.message.contains("unknown space `G`"));
        let e = parse_lcoalg("space F = {a}\ncheck coassoc Delta=Nope").unwrap_err();
        assert_eq!((e.line, e.column), (2, 21));
        let e = parse_lcoalg("space F = {a}\ncheck coasoc").unwrap_err();
        assert!(e.expected.contains(&"`coassoc`".to_string()));
        let e = parse_lcoalg("  a -> <a,a>").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
    }

    #[test]
    fn coefficients() {
        let d = parse_lcoalg("space F = {a,b}\ncoproduct D on F:\n  a -> q^-1*<a,b> - (q+1)/2*<b,a>; b -> -<b,b> + 0*<a,a>").unwrap();
        let rows = &d.coproducts[0].rows;
        assert_eq!(rows[0].1.coeff(&[Label::new("a"), Label::new("b")]), Scalar::q_pow(-1));
        let half = "(q+1)/2".parse::<Scalar>().unwrap();
        assert_eq!(rows[0].1.coeff(&[Label::new("b"), Label::new("a")]), -&half);
        assert_eq!(rows[1].1, TensorVec::of(&[&["b", "b"]]).scale(&Scalar::from_int(-1)));
        let e = parse_lcoalg("space F = {a}\ncoproduct D on F:\n  a -> q+1*<a,a>").unwrap_err();
        assert!(e.message.contains("parenthesised"));
        let e = parse_lcoalg("space F = {a}\ncoproduct D on F:\n  a -> (q*<a,a>").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn blocks_round_trip() {
        let text = "space G = { g0, g1 }\nspace H = { h0, h1 }\n\
            coproduct Delta on G:\n  g0 -> <g0,g0>\n  g1 -> 2*<g1,g1> - (1/3)*<g0,g1>\n\
            counit eps on G:\n  g0 -> 1\n  g1 -> q^2 - 1\n\
            algebra m on G:\n  g0 * g0 -> <g0>\n  g0 * g1 -> <g1>\n  g1 * g0 -> <g1>\n  g1 * g1 -> <g0>\n  unit -> <g0>\n\
            channel Phi : G -> H:\n  g0 -> <h0>\n  g1 -> <h1>\n\
            check coassoc Delta=Delta\nentangle flower using Phi\n";
        let d = parse_lcoalg(text).unwrap();
        let again = parse_lcoalg(&d.to_string()).unwrap();
        assert_eq!(again, d);
        assert_eq!(again.to_string(), d.to_string());
        let s = d.structure("G").unwrap();
        assert!(s.algebra().is_some());
        assert_eq!(d.channel("Phi").unwrap().forward(&Label::new("g1")), TensorVec::of(&[&["h1"]]));
    }

    #[test]
    fn duplicates_are_rejected() {
        assert!(parse_lcoalg("space F = {a, a}").is_err());
        assert!(parse_lcoalg("space F = {a}\nspace F = {b}").is_err());
        let e = parse_lcoalg("space F = {a}\ncoproduct D on F:\n  a -> <a,a>\n  a -> <a,a>").unwrap_err();
        assert!(e.message.contains("second row"));
    }
}
