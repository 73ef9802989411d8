//! Subcommand dispatch. Exit status: 0 when every check passes, 1 when one
//! fails, 2 on usage, input or parse errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lcoalg::coalgebra::{check, check_axiom, Axiom, AxiomReport, LStructure};
use lcoalg::complex::{check_complex_form, compare_forms, flower_coproducts, BoundaryForm, ComplexError};
use lcoalg::constructions::{
    achiral_entangle, flower_structure, markov_entangle, self_entangle, self_tiling_dendriform, tiling_check, ConstructionError,
    EntangledStructure, MarkovKind, Transport,
};
use lcoalg::convolution::{bar_unit, check_leibniz_poisson, structure_constants, Convolution};
use lcoalg::exactlinalg::Label;
use lcoalg::graphs::{covering_check, dot_export, geometric_support, natural_lift, parse_undirected};

use crate::builtin::fixture_text;
use crate::dsl::{parse_lcoalg, Directive, Document};
use crate::report::Report;

#[derive(Parser, Debug)]
#[command(name = "lcoalg", version, about = "Exact checks of L-coalgebras, entanglements and their duals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "self")]
    SelfEntangle,
    Achiral,
    Debruijn,
    Flower,
    Tiling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransportArg {
    Plain,
    Tilde,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check axioms on the structure of one space.
    Check {
        file: PathBuf,
        /// Axiom id; repeatable. Without it the file's `check` directives run.
        #[arg(long)]
        axiom: Vec<String>,
        /// `role=name` pairs, comma separated or repeated. Unbound roles bind
        /// to the coproduct of the same name.
        #[arg(long, value_delimiter = ',')]
        bind: Vec<String>,
        #[arg(long)]
        space: Option<String>,
    },
    /// Geometric support of coproducts, optionally as DOT.
    Support {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        coproducts: Vec<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        space: Option<String>,
    },
    /// Build an entanglement and write it as a new document.
    Entangle {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        channel: Option<String>,
        /// Unit label for the flower kind.
        #[arg(long)]
        unit: Option<String>,
        #[arg(long, value_enum, default_value = "plain")]
        transport: TransportArg,
        #[arg(long)]
        space: Option<String>,
    },
    /// Convolution brackets of the self-entanglement.
    Bracket {
        file: PathBuf,
        #[arg(long)]
        constants: bool,
        #[arg(long)]
        channel: Option<String>,
        #[arg(long)]
        space: Option<String>,
    },
    /// Boundary complex of a group algebra.
    Complex {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        unit: Option<String>,
        #[arg(long, default_value = "primary")]
        form: BoundaryForm,
        #[arg(long)]
        space: Option<String>,
    },
    /// Natural lift and coassociative covering of an undirected graph.
    Embed {
        #[arg(long)]
        edges: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print a built-in fixture: F, slq2, su2q-coalg, cibils(n,q),
    /// debruijn(n), petersen, group(n).
    Fixtures {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Stop {
    Usage(String),
    /// A construction refused its input because a check failed.
    Failed(Report),
}

type Res<T> = Result<T, Stop>;

fn usage(e: impl std::fmt::Display) -> Stop {
    Stop::Usage(e.to_string())
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Res<Document> {
    parse_lcoalg(&read(path)?).map_err(|d| usage(format!("{}:{d}", path.display())))
}

fn space_of(doc: &Document, space: &Option<String>) -> Res<String> {
    match space {
        Some(s) => Ok(s.clone()),
        None => doc.default_space().map(str::to_string).map_err(usage),
    }
}

fn structure(doc: &Document, space: &str) -> Res<LStructure> {
    doc.structure(space).map_err(usage)
}

fn construction(command: &str, e: ConstructionError) -> Stop {
    match e {
        ConstructionError::Precondition(r) => {
            let mut rep = Report::new(command);
            rep.push(&r);
            Stop::Failed(rep)
        }
        other => usage(other),
    }
}

fn complex_error(e: ComplexError) -> Stop {
    match e {
        ComplexError::NotCoassociative(r) => {
            let mut rep = Report::new("complex");
            rep.push(&r);
            Stop::Failed(rep)
        }
        other => usage(other),
    }
}

/// The channel named on the command line, by the file's entangle directive,
/// or the only one leaving `space`.
fn channel_name(doc: &Document, space: &str, flag: &Option<String>) -> Res<String> {
    if let Some(c) = flag {
        return Ok(c.clone());
    }
    let directed = doc.directives.iter().find_map(|d| match d {
        Directive::Entangle { channel: Some(c), .. } => Some(c.clone()),
        _ => None,
    });
    if let Some(c) = directed {
        return Ok(c);
    }
    let mut from = doc.channels_from(space);
    match (from.next(), from.next()) {
        (Some(c), None) => Ok(c.name.clone()),
        (None, _) => Err(usage(format!("no channel leaves space `{space}`"))),
        _ => Err(usage(format!("several channels leave `{space}`; pass --channel"))),
    }
}

fn parse_bindings(list: &[String]) -> Res<BTreeMap<String, String>> {
    list.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| match s.split_once('=') {
            Some((r, n)) if !r.trim().is_empty() && !n.trim().is_empty() => Ok((r.trim().to_string(), n.trim().to_string())),
            _ => Err(usage(format!("bad binding `{s}`; expected role=name"))),
        })
        .collect()
}

/// Every role of `axiom` bound, defaulting to the role's own name.
fn complete(axiom: Axiom, given: &BTreeMap<String, String>) -> BTreeMap<String, String> {
    axiom.roles().iter().map(|r| (r.name.to_string(), given.get(r.name).cloned().unwrap_or_else(|| r.name.to_string()))).collect()
}

fn run_check(s: &LStructure, axiom: &str, given: &BTreeMap<String, String>) -> Res<AxiomReport> {
    let a: Axiom = axiom.parse().map_err(usage)?;
    let b = complete(a, given);
    Ok(check_axiom(s, axiom, &b).map_err(usage)?.with_bindings(b))
}

fn cmd_check(file: &Path, axioms: &[String], bind: &[String], space: &Option<String>) -> Res<Report> {
    let doc = load(file)?;
    let given = parse_bindings(bind)?;
    let mut requests: Vec<(String, BTreeMap<String, String>)> = axioms.iter().map(|a| (a.clone(), given.clone())).collect();
    if requests.is_empty() {
        for d in &doc.directives {
            if let Directive::Check { axiom, bindings } = d {
                requests.push((axiom.clone(), bindings.iter().cloned().collect()));
            }
        }
    }
    if requests.is_empty() {
        return Err(usage("nothing to check: pass --axiom or add a `check` directive"));
    }
    let space = match space {
        Some(s) => s.clone(),
        None => {
            let names: Vec<&String> = requests.iter().flat_map(|(_, b)| b.values()).collect();
            match doc.coproducts.iter().find(|c| names.contains(&&c.name)) {
                Some(c) => c.space.clone(),
                None => space_of(&doc, &None)?,
            }
        }
    };
    let s = structure(&doc, &space)?;
    let mut rep = Report::new("check");
    for (axiom, b) in &requests {
        rep.push(&run_check(&s, axiom, b)?);
    }
    Ok(rep)
}

fn cmd_support(file: &Path, names: &[String], dot: &Option<PathBuf>, space: &Option<String>) -> Res<Report> {
    let doc = load(file)?;
    let space = space_of(&doc, space)?;
    let s = structure(&doc, &space)?;
    let names: Vec<String> = if names.is_empty() { s.coproducts().map(|(n, _)| n.clone()).collect() } else { names.to_vec() };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let g = geometric_support(&s, &refs).map_err(usage)?;
    let mut rep = Report::new("support");
    let arrows: Vec<(String, String, String)> = g.arrows().map(|(a, b, w)| (a.to_string(), b.to_string(), w.to_string())).collect();
    rep.set("coproducts", &names);
    rep.set("vertices", g.vertices().iter().map(Label::as_str).collect::<Vec<_>>());
    rep.set("arrow_count", g.arrow_count());
    rep.set("loop_count", g.loop_count());
    rep.set("arrows", arrows);
    match dot {
        Some(p) => write(p, &dot_export(&g))?,
        None => rep.set("dot", dot_export(&g)),
    }
    Ok(rep)
}

fn kind_of(doc: &Document, flag: Option<Kind>) -> Res<Kind> {
    if let Some(k) = flag {
        return Ok(k);
    }
    let k = doc.directives.iter().find_map(|d| match d {
        Directive::Entangle { kind, .. } => Some(kind.clone()),
        _ => None,
    });
    let k = k.ok_or_else(|| usage("pass --kind or add an `entangle` directive"))?;
    Kind::from_str(&k, true).map_err(usage)
}

/// `s` on the channel target when the document gives it a `Delta`, otherwise
/// the transport of `source`.
fn target_coalgebra(doc: &Document, target: &str, source: &LStructure, phi: &lcoalg::constructions::ChannelMap) -> Res<LStructure> {
    if doc.coproducts.iter().any(|c| c.space == target && c.name == "Delta") {
        structure(doc, target)
    } else {
        Ok(phi.transport_structure(source))
    }
}

/// The checks each construction is expected to satisfy, as directives.
fn expected_checks(kind: Kind) -> Vec<(&'static str, Vec<(&'static str, &'static str)>)> {
    let full = vec![("Delta", "Delta_star"), ("delta", "delta1"), ("delta_hat", "delta1_hat")];
    match kind {
        Kind::SelfEntangle => vec![
            ("codipterous", full[..2].to_vec()),
            ("anti_codipterous", vec![full[0], full[2]]),
            ("pre_dendriform", full.clone()),
            ("codialgebra", full[1..].to_vec()),
            ("cotrialgebra", full),
        ],
        Kind::Achiral => vec![("entanglement", vec![("Delta_tilde", "delta2_tilde"), ("Delta", "delta1")])],
        Kind::Debruijn => vec![
            ("entanglement", vec![("Delta_tilde", "delta"), ("Delta", "delta_M")]),
            ("entanglement", vec![("Delta_tilde", "delta_M_tilde"), ("Delta", "delta")]),
        ],
        Kind::Flower => vec![
            ("entanglement", vec![("Delta_tilde", "delta_f_tilde"), ("Delta", "delta")]),
            ("entanglement", vec![("Delta_tilde", "delta"), ("Delta", "delta_f")]),
        ],
        Kind::Tiling => vec![("dendriform_coalgebra", vec![("delta", "delta_d"), ("delta_hat", "delta_d_hat")])],
    }
}

struct EntangleArgs<'a> {
    kind: Option<Kind>,
    channel: &'a Option<String>,
    unit: &'a Option<String>,
    transport: TransportArg,
    space: &'a Option<String>,
}

fn build(doc: &Document, a: &EntangleArgs<'_>, command: &str) -> Res<(Kind, EntangledStructure, String, String, String)> {
    let kind = kind_of(doc, a.kind)?;
    let space = space_of(doc, a.space)?;
    let s = structure(doc, &space)?;
    let cname = channel_name(doc, &space, a.channel)?;
    let phi = doc.channel(&cname).map_err(usage)?;
    let target = doc.channels.iter().find(|c| c.name == cname).map(|c| c.target.clone()).expect("resolved above");
    let fail = |e| construction(command, e);
    let e = match kind {
        Kind::SelfEntangle => self_entangle(&s, &phi).map_err(fail)?,
        Kind::Achiral => {
            let t = match a.transport {
                TransportArg::Plain => Transport::Plain,
                TransportArg::Tilde => Transport::Tilde,
            };
            achiral_entangle(&s, &phi, t).map_err(fail)?
        }
        Kind::Debruijn => {
            let c = target_coalgebra(doc, &target, &s, &phi)?;
            markov_entangle(&s, &c, &phi, MarkovKind::DeBruijn).map_err(fail)?
        }
        Kind::Flower => {
            let unit = match a.unit {
                Some(u) => Label::new(u),
                None => algebra_unit(&s).ok_or_else(|| usage("pass --unit for the flower kind"))?,
            };
            let g = flower_structure(s.space(), &unit).map_err(fail)?;
            let c = target_coalgebra(doc, &target, &s, &phi)?;
            markov_entangle(&g, &c, &phi, MarkovKind::Flower { unit }).map_err(fail)?
        }
        Kind::Tiling => self_tiling_dendriform(&s, &phi).map_err(fail)?,
    };
    Ok((kind, e, space, target, cname))
}

fn algebra_unit(s: &LStructure) -> Option<Label> {
    let u = s.algebra()?.unit();
    match u.iter().collect::<Vec<_>>().as_slice() {
        [(t, c)] if c.is_one() && t.len() == 1 => Some(t[0].clone()),
        _ => None,
    }
}

fn fresh(doc: &Document, base: &str) -> String {
    let mut name = base.to_string();
    while doc.spaces.iter().any(|s| s.name == name) {
        name.push('_');
    }
    name
}

fn cmd_entangle(file: &Path, a: &EntangleArgs<'_>, out: &Option<PathBuf>) -> Res<Report> {
    let doc = load(file)?;
    let (kind, e, source, target, cname) = build(&doc, a, "entangle")?;
    let mut rep = Report::new("entangle");
    rep.push(&e.check_boundary());
    let s = e.structure();
    let checks = expected_checks(kind);
    let mut directives = Vec::new();
    for (axiom, pairs) in &checks {
        let r = check(s, axiom, pairs).map_err(usage)?;
        rep.push(&r.with_bindings(pairs.iter().map(|(x, y)| (x.to_string(), y.to_string()))));
        directives.push(Directive::Check {
            axiom: axiom.to_string(),
            bindings: pairs.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect(),
        });
    }
    if kind == Kind::Tiling {
        rep.push(&tiling_check(s, "delta_d", "delta_d_hat").map_err(usage)?);
    }
    let mut outdoc = Document::default();
    outdoc.add_space(&source, e.c1());
    outdoc.add_space(&target, e.c2());
    let whole = fresh(&doc, "C");
    outdoc.add_structure(&whole, s);
    outdoc.add_channel(&cname, &source, &target, e.channel());
    outdoc.directives = directives;
    rep.set("kind", kind.to_possible_value().expect("no skipped variants").get_name());
    rep.set("space", &whole);
    rep.set("coproducts", s.coproducts().map(|(n, _)| n.clone()).collect::<Vec<_>>());
    match out {
        Some(p) => write(p, &outdoc.to_string())?,
        None => rep.set("document", outdoc.to_string()),
    }
    Ok(rep)
}

fn cmd_bracket(file: &Path, constants: bool, channel: &Option<String>, space: &Option<String>) -> Res<Report> {
    let doc = load(file)?;
    let a = EntangleArgs { kind: Some(Kind::SelfEntangle), channel, unit: &None, transport: TransportArg::Plain, space };
    let (_, e, ..) = build(&doc, &a, "bracket")?;
    let conv = Convolution::new(&e).map_err(usage)?;
    let mut rep = Report::new("bracket");
    rep.push(&check_leibniz_poisson(&e).map_err(usage)?);
    let bar = bar_unit(&e).map_err(usage)?;
    rep.push(&bar.report);
    rep.set("bar_unit", bar.unit.to_string());
    let mut table = BTreeMap::new();
    let duals = conv.duals();
    for f in &duals {
        for g in &duals {
            let b = conv.bracket(f, g);
            if !b.is_zero() {
                table.insert(format!("[{f},{g}]"), b.to_string());
            }
        }
    }
    rep.set("brackets", table);
    if constants {
        let sc = structure_constants(&e).map_err(usage)?;
        rep.push(&sc.report());
        let mut b = BTreeMap::new();
        let mut c = BTreeMap::new();
        let (c1, c2) = (e.c1().labels(), e.c2().labels());
        for i in c2 {
            for j in c1 {
                for k in c2 {
                    let v = sc.b(i, j, k);
                    if !v.is_zero() {
                        b.insert(format!("B({i},{j},{k})"), v.to_string());
                    }
                }
            }
        }
        for i in c1 {
            for j in c1 {
                for k in c1 {
                    let v = sc.c(i, j, k);
                    if !v.is_zero() {
                        c.insert(format!("C({i},{j},{k})"), v.to_string());
                    }
                }
            }
        }
        rep.set("B", b);
        rep.set("C", c);
    }
    Ok(rep)
}

fn cmd_complex(file: &Path, max: usize, unit: &Option<String>, form: BoundaryForm, space: &Option<String>) -> Res<Report> {
    let doc = load(file)?;
    let space = space_of(&doc, space)?;
    let s = structure(&doc, &space)?;
    let unit = match unit {
        Some(u) => Label::new(u),
        None => algebra_unit(&s).ok_or_else(|| usage("pass --unit; the file's algebra has no single-label unit"))?,
    };
    let f = flower_coproducts(&s, &unit).map_err(complex_error)?;
    let mut rep = Report::new("complex");
    let main = check_complex_form(&f, max, form).map_err(complex_error)?;
    rep.push(&main.report);
    if form == BoundaryForm::Primary {
        rep.push(&check_complex_form(&f, max, BoundaryForm::Prime).map_err(complex_error)?.report);
        rep.push(&compare_forms(&f, BoundaryForm::Alternative, BoundaryForm::Primary, max).map_err(complex_error)?);
        rep.push(&f.markov_report());
        rep.push(&f.ito_report().map_err(complex_error)?);
    }
    let ranks: Vec<BTreeMap<&str, Option<usize>>> = main
        .ranks
        .iter()
        .map(|r| {
            BTreeMap::from([
                ("degree", Some(r.degree)),
                ("source_dim", Some(r.source_dim)),
                ("rank", Some(r.rank)),
                ("kernel", Some(r.kernel)),
                ("homology", r.homology),
            ])
        })
        .collect();
    rep.set("form", form.to_string());
    rep.set("ranks", ranks);
    Ok(rep)
}

fn cmd_embed(edges: &Path, dot: &Option<PathBuf>) -> Res<Report> {
    let g = parse_undirected(&read(edges)?).map_err(|e| usage(format!("{}: {e}", edges.display())))?;
    let lift = natural_lift(&g).map_err(usage)?;
    let space = lift.digraph.space().map_err(usage)?;
    let mut rep = Report::new("embed");
    for (name, m) in &lift.family {
        let s = LStructure::new(space.clone()).with_coproduct(name, m.clone()).map_err(usage)?;
        rep.push(&run_check(&s, "coassoc", &BTreeMap::from([("Delta".to_string(), name.clone())]))?);
    }
    rep.push(&covering_check(&lift.digraph, &lift.family).map_err(usage)?);
    rep.set("vertices", lift.digraph.vertices().len());
    rep.set("loops", lift.digraph.loop_count());
    rep.set("arrows", lift.digraph.arrow_count() - lift.digraph.loop_count());
    rep.set("family", lift.family.len());
    if let Some(p) = dot {
        write(p, &dot_export(&lift.digraph))?;
    }
    Ok(rep)
}

enum Output {
    Report(Report),
    Text(String),
}

fn dispatch(cmd: &Command) -> Res<Output> {
    let r = match cmd {
        Command::Check { file, axiom, bind, space } => cmd_check(file, axiom, bind, space)?,
        Command::Support { file, coproducts, dot, space } => cmd_support(file, coproducts, dot, space)?,
        Command::Entangle { file, kind, out, channel, unit, transport, space } => {
            let a = EntangleArgs { kind: *kind, channel, unit, transport: *transport, space };
            cmd_entangle(file, &a, out)?
        }
        Command::Bracket { file, constants, channel, space } => cmd_bracket(file, *constants, channel, space)?,
        Command::Complex { file, max_degree, unit, form, space } => cmd_complex(file, *max_degree, unit, *form, space)?,
        Command::Embed { edges, dot } => cmd_embed(edges, dot)?,
        Command::Fixtures { name, out } => {
            let text = fixture_text(name).map_err(usage)?;
            return match out {
                Some(p) => write(p, &text).map(|_| Output::Text(String::new())),
                None => Ok(Output::Text(text)),
            };
        }
    };
    Ok(Output::Report(r))
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(Output::Text(t)) => Outcome { code: 0, stdout: t, stderr: String::new() },
        Ok(Output::Report(r)) => Outcome { code: if r.passed { 0 } else { 1 }, stdout: r.to_json() + "\n", stderr: String::new() },
        Err(Stop::Failed(r)) => Outcome { code: 1, stdout: r.to_json() + "\n", stderr: String::new() },
        Err(Stop::Usage(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}
