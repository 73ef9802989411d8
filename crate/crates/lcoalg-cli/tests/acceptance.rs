//! The acceptance suite: one line per criterion, exit status 1 if any fails.

use std::process::ExitCode;

use lcoalg::coalgebra::{check, dichotomy_sum, LStructure};
use lcoalg::complex::{boundary, check_complex, check_complex_form, compare_forms, flower_coproducts, BoundaryForm, FlowerStructure};
use lcoalg::constructions::{
    cibils_structures, de_bruijn_codialgebra, de_bruijn_codialgebra_on, ito_pair, ito_property, markov_entangle, ChannelMap, Indexing,
    MarkovKind,
};
use lcoalg::convolution::{bar_unit, check_leibniz_poisson, structure_constants, Convolution, Functional};
use lcoalg::exactlinalg::{BasisSpace, Label, Scalar, TensorVec};
use lcoalg::fixtures;
use lcoalg::graphs::{covering_check, de_bruijn_on, natural_lift, petersen, same_graph, support_of};
use lcoalg::ncpoly::{
    check_bridge_homomorphism, check_l_hopf, nc_normalize, relation_set, slq2_antipodes, HopfIdentity, NCPoly, Side, Sigma,
};
use lcoalg_cli::builtin::fixture_text;
use lcoalg_cli::run;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn l(s: &str) -> Label {
    Label::new(s)
}

fn t(ts: &[&[&str]]) -> TensorVec {
    TensorVec::of(ts)
}

fn passes(s: &LStructure, axiom: &str, pairs: &[(&str, &str)]) -> Result<usize, String> {
    let r = check(s, axiom, pairs).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "{axiom} fails: {:?}", r.witnesses().first());
    Ok(r.checked())
}

fn markov_pair_of_f() -> Outcome {
    passes(&fixtures::f(), "coassoc", &[("Delta", "Delta")])?;
    let m = fixtures::f_markov();
    passes(&m, "entanglement", &[("Delta_tilde", "Delta_tilde"), ("Delta", "Delta")])?;
    let r = check(&m, "coassoc", &[("Delta", "Delta")]).unwrap();
    ensure!(!r.passed(), "Delta_M unexpectedly coassociative");
    let w = &r.witnesses()[0];
    Ok(format!("Delta_M fails coassoc at {} ({} witnesses)", w.at, r.witnesses().len()))
}

fn self_entangled_f() -> Outcome {
    let e = fixtures::f_entangled();
    let s = e.structure();
    let full = [("Delta", "Delta_star"), ("delta", "delta1"), ("delta_hat", "delta1_hat")];
    passes(s, "codipterous", &full[..2])?;
    passes(s, "anti_codipterous", &[full[0], full[2]])?;
    passes(s, "pre_dendriform", &full)?;
    passes(s, "codialgebra", &full[1..])?;
    passes(s, "cotrialgebra", &full)?;
    let d1x = e.get("delta1").unwrap().at_name("x");
    let d1hx = e.get("delta1_hat").unwrap().at_name("x");
    ensure!(d1x == t(&[&["a", "x"], &["b", "z"]]), "delta1(x) = {d1x}");
    ensure!(d1hx == t(&[&["x", "a"], &["y", "c"]]), "delta1_hat(x) = {d1hx}");
    Ok(format!("five axiom systems pass; delta1(x) = {d1x}; delta1_hat(x) = {d1hx}"))
}

/// `[i*, j*]` read off hand-written tables of the two bridges:
/// coefficient of `i⊗j` in `δ̂1(k)` minus coefficient of `j⊗i` in `δ1(k)`.
fn oracle_bracket(space: &BasisSpace, i: &str, j: &str) -> Functional {
    let d1 = |k: &str| match k {
        "a" => t(&[&["a", "a"], &["b", "c"]]),
        "b" => t(&[&["a", "b"], &["b", "d"]]),
        "c" => t(&[&["c", "a"], &["d", "c"]]),
        "d" => t(&[&["c", "b"], &["d", "d"]]),
        "x" => t(&[&["a", "x"], &["b", "z"]]),
        "y" => t(&[&["a", "y"], &["b", "u"]]),
        "z" => t(&[&["c", "x"], &["d", "z"]]),
        _ => t(&[&["c", "y"], &["d", "u"]]),
    };
    let d1h = |k: &str| match k {
        "x" => t(&[&["x", "a"], &["y", "c"]]),
        "y" => t(&[&["x", "b"], &["y", "d"]]),
        "z" => t(&[&["z", "a"], &["u", "c"]]),
        "u" => t(&[&["z", "b"], &["u", "d"]]),
        other => d1(other),
    };
    Functional::scalar(
        space,
        space.labels().iter().map(|k| (k.clone(), d1h(k.as_str()).coeff(&[l(i), l(j)]) - d1(k.as_str()).coeff(&[l(j), l(i)]))),
    )
}

fn bracket_suite() -> Outcome {
    let e = fixtures::f_entangled();
    let c = Convolution::new(&e).map_err(|e| e.to_string())?;
    let s = |n: &str| c.dual(&l(n));
    let br = |a: &str, b: &str| c.bracket(&s(a), &s(b));
    let zero = Functional::zero(e.space());
    ensure!(br("a", "b") == s("b"), "[a*,b*] = {}", br("a", "b"));
    ensure!(br("b", "c") == s("a").sub(&s("d")), "[b*,c*] = {}", br("b", "c"));
    ensure!(br("a", "x") == zero, "[a*,x*] = {}", br("a", "x"));
    ensure!(br("y", "c") == s("x").sub(&s("u")), "[y*,c*] = {}", br("y", "c"));
    let sc = structure_constants(&e).map_err(|e| e.to_string())?;
    let mut mixed = 0;
    for v in e.c1().labels() {
        for w in e.c2().labels() {
            ensure!(sc.mixed_bracket(v, w).is_some_and(Functional::is_zero), "[{v}*, {w}*] does not vanish");
            mixed += 1;
        }
    }
    ensure!(mixed == 16, "{mixed} mixed pairs");
    let xa = br("x", "a");
    let oracle = oracle_bracket(e.space(), "x", "a");
    ensure!(xa == oracle, "[x*,a*] = {xa}, oracle gives {oracle}");
    ensure!(xa != s("x"), "[x*,a*] unexpectedly equals the printed x*");
    Ok(format!("4 printed values, 16 mixed brackets vanish; [x*,a*] = {xa} by both routes (printed value x* not reproduced)"))
}

fn dual_suite() -> Outcome {
    let r = check_leibniz_poisson(&fixtures::f_entangled()).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "{:?}", r.witnesses().first());
    ensure!(r.checked() >= 3 * 512, "only {} checks", r.checked());
    Ok(format!("{} identities checked over 512 triples", r.checked()))
}

fn bar_unit_criterion() -> Outcome {
    let e = fixtures::f_entangled();
    let u = bar_unit(&e).map_err(|e| e.to_string())?;
    ensure!(u.report.passed(), "{:?}", u.report.witnesses().first());
    ensure!(u.report.checked() == 16, "{} checks", u.report.checked());
    let c = Convolution::new(&e).map_err(|e| e.to_string())?;
    for f in c.duals() {
        ensure!(c.dashv(&f, &u.unit) == f && c.vdash(&u.unit, &f) == f, "bar unit fails at {f}");
    }
    Ok(format!("e = {}", u.unit))
}

fn cibils() -> Outcome {
    let mut runs = 0;
    for n in [3, 5] {
        for q in [Scalar::q(), Scalar::from_int(2)] {
            let c = cibils_structures(n, &q, Indexing::Truncated).map_err(|e| e.to_string())?;
            let pair = [("delta", "delta"), ("delta_hat", "delta_hat")];
            passes(&c.codialgebra, "codialgebra", &pair)?;
            passes(&c.dendriform, "dendriform_coalgebra", &pair)?;
            let sum = dichotomy_sum(&c.dendriform, "delta", "delta_hat").unwrap();
            let s = LStructure::new(c.dendriform.space().clone()).with_coproduct("sum", sum).unwrap();
            passes(&s, "coassoc", &[("Delta", "sum")])?;
            runs += 1;
        }
    }
    Ok(format!("{runs} cases: n in {{3,5}}, q symbolic and q = 2"))
}

fn de_bruijn() -> Outcome {
    for n in 1..=4 {
        let g = de_bruijn_codialgebra(n).map_err(|e| e.to_string())?;
        let ys: Vec<Label> = (1..=n).map(|i| Label::from(format!("y{i}"))).collect();
        let c = de_bruijn_codialgebra_on(&ys).map_err(|e| e.to_string())?;
        let pairs: Vec<(String, String)> = (1..=n).map(|i| (format!("x{i}"), format!("y{i}"))).collect();
        let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let phi = ChannelMap::renaming(&refs).map_err(|e| e.to_string())?;
        let e = markov_entangle(&g, &c, &phi, MarkovKind::DeBruijn).map_err(|e| e.to_string())?;
        let sup = support_of(e.space(), [e.get("delta_M").unwrap(), e.get("delta").unwrap()]);
        let big = de_bruijn_on(e.space().labels()).map_err(|e| e.to_string())?;
        ensure!(same_graph(&sup, &big), "n = {n}: support differs from the ({},1)-De Bruijn graph", 2 * n);
    }
    Ok("n = 1..4".into())
}

fn flower(n: usize) -> FlowerStructure {
    flower_coproducts(&fixtures::cyclic_group(n), &l("g0")).unwrap()
}

fn complex() -> Outcome {
    for n in [2, 3] {
        let f = flower(n);
        let r = check_complex(&f, 3).map_err(|e| e.to_string())?;
        ensure!(r.report.passed(), "Z/{n}: {:?}", r.report.witnesses().first());
        let d0 = boundary(0, &f, BoundaryForm::Primary).map_err(|e| e.to_string())?;
        let d1 = boundary(1, &f, BoundaryForm::Primary).map_err(|e| e.to_string())?;
        ensure!(d1.map().compose(d0.map()).unwrap().is_zero(), "Z/{n}: d1(Delta - Delta_f) != 0");
        let p = check_complex_form(&f, 3, BoundaryForm::Prime).map_err(|e| e.to_string())?;
        ensure!(p.report.passed(), "Z/{n}: prime form is not a complex");
        let cmp = compare_forms(&f, BoundaryForm::Alternative, BoundaryForm::Primary, 3).map_err(|e| e.to_string())?;
        ensure!(cmp.passed(), "Z/{n}: alternative form differs: {:?}", cmp.witnesses().first());
    }
    Ok("Z/2 and Z/3, degrees up to 3".into())
}

fn ito() -> Outcome {
    let f = flower(3);
    let r = f.ito_report().map_err(|e| e.to_string())?;
    ensure!(r.passed(), "flower: {:?}", r.witnesses().first());
    let e = fixtures::shift_entanglement();
    let a = e.algebra().ok_or("no algebra")?.clone();
    let pair = ito_pair(&e, "delta1", "delta1_hat").map_err(|e| e.to_string())?;
    let ls = e.space().labels();
    let right = ito_property(&pair.right, e.get("delta1").unwrap(), &a, ls);
    let left = ito_property(&pair.left, e.get("delta1_hat").unwrap(), &a, ls);
    ensure!(right.passed() && left.passed(), "Z/3 x Z/2: {:?}", right.witnesses().first().or(left.witnesses().first()));
    Ok(format!("flower Z/3 ({} checks), Z/3 x Z/2 ({} pairs per side)", r.checked(), right.checked()))
}

fn petersen_covering() -> Outcome {
    let lift = natural_lift(&petersen()).map_err(|e| e.to_string())?;
    let g = &lift.digraph;
    ensure!(g.loop_count() == 10, "{} loops", g.loop_count());
    ensure!(g.arrow_count() - g.loop_count() == 30, "{} arrows", g.arrow_count() - g.loop_count());
    for (name, m) in &lift.family {
        let s = LStructure::new(m.space().clone()).with_coproduct(name, m.clone()).unwrap();
        passes(&s, "coassoc", &[("Delta", name)])?;
    }
    let r = covering_check(g, &lift.family).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "covering: {:?}", r.witnesses().first());
    Ok(format!("10 loops, 30 arrows, {} coassociative bridges, covering passes", lift.family.len()))
}

fn quantum() -> Outcome {
    let (r1, _) = relation_set("slq2").unwrap();
    let (r2, _) = relation_set("slq2_tilde").unwrap();
    let both = r1.union(&r2);
    let det = NCPoly::of(&["a", "d"]).sub(&NCPoly::of(&["b", "c"]).scale(&Scalar::q_pow(-1))).sub(&NCPoly::one());
    ensure!(nc_normalize(&det, &r1).unwrap().is_zero(), "ad - q^-1 bc - 1 does not reduce to 0");
    let e = fixtures::slq2_entangled();
    let h = check_bridge_homomorphism(&e, &both, &["Delta_star", "delta1", "delta2_tilde"]).map_err(|e| e.to_string())?;
    ensure!(h.passed(), "homomorphism: {:?}", h.witnesses().first());
    let s = slq2_antipodes(&e).map_err(|e| e.to_string())?;
    let id = HopfIdentity::new("delta1", Sigma::One, Side::Right);
    let hopf = check_l_hopf(&e, &s, &both, std::slice::from_ref(&id)).map_err(|e| e.to_string())?;
    ensure!(hopf.passed() && hopf.checked() == 8, "{id}: {:?}", hopf.witnesses().first());
    let x_case = NCPoly::of(&["a", "b"]).scale(&-Scalar::q()).add(&NCPoly::of(&["b", "a"]));
    ensure!(nc_normalize(&x_case, &r1).unwrap().is_zero(), "-q ab + ba does not reduce to 0");
    Ok(format!("det reduces to 0; {} homomorphism checks; {id} on 8 generators", h.checked()))
}

struct Cli {
    dir: tempfile::TempDir,
}

impl Cli {
    fn file(&self, name: &str, text: &str) -> String {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn fixture(&self, name: &str) -> String {
        self.file(&format!("{name}.lcoalg"), &fixture_text(name).unwrap())
    }

    fn out(&self, name: &str) -> String {
        self.dir.path().join(name).to_str().unwrap().to_string()
    }
}

fn lcoalg(args: &[&str]) -> lcoalg_cli::Outcome {
    run(std::iter::once("lcoalg").chain(args.iter().copied()))
}

fn cli_end_to_end() -> Outcome {
    let cli = Cli { dir: tempfile::tempdir().map_err(|e| e.to_string())? };
    let f = cli.fixture("F");
    let group = cli.fixture("group(3)");
    let edges = cli.fixture("petersen");
    let entangled = cli.out("E.lcoalg");
    let dot = cli.out("p.dot");
    let runs: Vec<Vec<&str>> = vec![
        vec!["fixtures", "F"],
        vec!["check", &f, "--axiom", "coassoc", "--bind", "Delta=Delta"],
        vec!["support", &f, "--coproducts", "Delta"],
        vec!["entangle", &f, "--kind", "self", "--out", &entangled],
        vec!["check", &entangled, "--axiom", "cotrialgebra", "--bind", "Delta=Delta_star,delta=delta1,delta_hat=delta1_hat"],
        vec!["bracket", &f, "--constants"],
        vec!["complex", &group, "--max-degree", "3"],
        vec!["embed", "--edges", &edges, "--dot", &dot],
    ];
    for args in &runs {
        let o = lcoalg(args);
        ensure!(o.code == 0, "`{}` exits {}: {}{}", args.join(" "), o.code, o.stdout, o.stderr);
    }
    let bad = cli.file("bad.lcoalg", &fixture_text("F").unwrap().replace("a -> <a,a> + <b,c>", "a -> <a,a> + 2*<b,c>"));
    let o = lcoalg(&["check", &bad, "--axiom", "coassoc"]);
    ensure!(o.code == 1, "corrupted fixture exits {}", o.code);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).map_err(|e| e.to_string())?;
    let rec = &v["records"][0];
    let at = rec["witnesses"][0]["at"].as_str().unwrap_or_default().to_string();
    ensure!(rec["axiom"] == "coassoc" && !at.is_empty(), "witness does not name the axiom and label: {rec}");
    Ok(format!("{} runs exit 0; corrupted F exits 1 with a coassoc witness at {at}", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("F is coassociative; its Markov pair is entangled but not coassociative", markov_pair_of_f),
        ("self-entangled F: five axiom systems and the bridge values", self_entangled_f),
        ("bracket values and the vanishing of mixed brackets", bracket_suite),
        ("Leibniz, Poisson, dialgebra and dendriform laws on all triples", dual_suite),
        ("bar unit on all eight dual functionals", bar_unit_criterion),
        ("Cibils codialgebras and dendriform coalgebras", cibils),
        ("De Bruijn entanglement support", de_bruijn),
        ("boundary complexes of Z/2 and Z/3", complex),
        ("Ito derivatives", ito),
        ("Petersen natural lift and covering", petersen_covering),
        ("Sl_q(2) relations, bridge homomorphisms and the antipode identity", quantum),
        ("CLI end to end", cli_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
