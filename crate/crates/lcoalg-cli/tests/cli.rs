use std::path::{Path, PathBuf};
use std::process::Command;

use lcoalg_cli::builtin::fixture_text;
use lcoalg_cli::{parse_lcoalg, run, Outcome};
use proptest::prelude::*;
use serde_json::Value;
use tempfile::TempDir;

fn lcoalg(args: &[&str]) -> Outcome {
    run(std::iter::once("lcoalg").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn fixture(&self, name: &str, file: &str) -> String {
        let p = self.path(file);
        std::fs::write(&p, fixture_text(name).unwrap()).unwrap();
        s(&p)
    }
}

fn s(p: &Path) -> String {
    p.to_str().unwrap().to_string()
}

fn assert_pass(o: &Outcome) -> Value {
    assert_eq!(o.code, 0, "stdout: {}\nstderr: {}", o.stdout, o.stderr);
    let v = json(o);
    assert_eq!(v["passed"], true);
    v
}

#[test]
fn every_fixture_prints_and_parses() {
    for name in ["F", "slq2", "su2q-coalg", "cibils(3,2)", "debruijn(3)", "group(3)"] {
        let o = lcoalg(&["fixtures", name]);
        assert_eq!(o.code, 0, "{name}: {}", o.stderr);
        let doc = parse_lcoalg(&o.stdout).unwrap_or_else(|d| panic!("{name}: {d}"));
        assert_eq!(doc.to_string(), o.stdout, "{name} is not in canonical form");
    }
    let o = lcoalg(&["fixtures", "petersen"]);
    assert_eq!(o.stdout.lines().count(), 15);
}

#[test]
fn fixture_directives_pass() {
    let d = Dir::new();
    for name in ["F", "slq2", "su2q-coalg", "cibils(3,2)", "debruijn(3)", "group(3)"] {
        let f = d.fixture(name, "x.lcoalg");
        let v = assert_pass(&lcoalg(&["check", &f]));
        assert!(!v["records"].as_array().unwrap().is_empty(), "{name}");
    }
}

#[test]
fn check_with_explicit_bindings() {
    let d = Dir::new();
    let f = d.fixture("F", "F.lcoalg");
    let out = s(&d.path("E.lcoalg"));
    assert_pass(&lcoalg(&["entangle", &f, "--out", &out]));
    let v =
        assert_pass(&lcoalg(&["check", &out, "--axiom", "cotrialgebra", "--bind", "Delta=Delta_star,delta=delta1,delta_hat=delta1_hat"]));
    assert_eq!(v["records"][0]["bindings"]["delta"], "delta1");
    assert_pass(&lcoalg(&["check", &out]));
}

#[test]
fn every_entangle_kind_round_trips() {
    let d = Dir::new();
    let cases = [
        ("F", &["--kind", "self"][..]),
        ("F", &["--kind", "tiling"]),
        ("slq2", &["--kind", "achiral"]),
        ("su2q-coalg", &[]),
        ("debruijn(3)", &[]),
        ("group(3)", &[][..]),
    ];
    for (name, extra) in cases {
        let f = d.fixture(name, "in.lcoalg");
        let out = s(&d.path("out.lcoalg"));
        let mut args = vec!["entangle", f.as_str(), "--out", out.as_str()];
        args.extend_from_slice(extra);
        assert_pass(&lcoalg(&args));
        assert_pass(&lcoalg(&["check", &out]));
    }
}

#[test]
fn bracket_reports_the_convolution_tables() {
    let d = Dir::new();
    let f = d.fixture("F", "F.lcoalg");
    let v = assert_pass(&lcoalg(&["bracket", &f, "--constants"]));
    assert_eq!(v["data"]["bar_unit"], "a* + d* + u* + x*");
    assert_eq!(v["data"]["brackets"]["[b*,c*]"], "a* - d*");
    assert_eq!(v["data"]["B"].as_object().unwrap().len(), 12);
}

#[test]
fn complex_ranks_of_the_cyclic_group() {
    let d = Dir::new();
    let f = d.fixture("group(3)", "g.lcoalg");
    let v = assert_pass(&lcoalg(&["complex", &f, "--max-degree", "3"]));
    let ranks: Vec<u64> = v["data"]["ranks"].as_array().unwrap().iter().map(|r| r["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [3, 6, 21, 60]);
}

#[test]
fn embed_the_petersen_graph() {
    let d = Dir::new();
    let f = d.fixture("petersen", "p.edges");
    let dot = d.path("p.dot");
    let v = assert_pass(&lcoalg(&["embed", "--edges", &f, "--dot", &s(&dot)]));
    assert_eq!(v["data"]["vertices"], 10);
    assert_eq!(v["data"]["arrows"], 30);
    assert_eq!(v["data"]["loops"], 10);
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("digraph"));
}

#[test]
fn support_of_f() {
    let d = Dir::new();
    let f = d.fixture("F", "F.lcoalg");
    let v = assert_pass(&lcoalg(&["support", &f, "--coproducts", "Delta"]));
    assert_eq!(v["data"]["arrow_count"], 8);
    assert_eq!(v["data"]["loop_count"], 2);
    assert!(v["data"]["dot"].as_str().unwrap().contains("\"b\" -> \"d\""));
}

#[test]
fn corrupted_coefficient_is_witnessed() {
    let d = Dir::new();
    let bad = fixture_text("F").unwrap().replace("a -> <a,a> + <b,c>", "a -> <a,a> + 2*<b,c>");
    let f = d.path("bad.lcoalg");
    std::fs::write(&f, bad).unwrap();
    let o = lcoalg(&["check", &s(&f), "--axiom", "coassoc"]);
    assert_eq!(o.code, 1);
    let v = json(&o);
    assert_eq!(v["passed"], false);
    let r = &v["records"][0];
    assert_eq!(r["axiom"], "coassoc");
    assert_eq!(r["verdict"], "fail");
    assert_eq!(r["witnesses"][0]["at"], "b");

    let o = lcoalg(&["entangle", &s(&f)]);
    assert_eq!(o.code, 1);
    assert_eq!(json(&o)["records"][0]["axiom"], "coassoc");
}

#[test]
fn parse_errors_exit_two_with_a_position() {
    let d = Dir::new();
    let f = d.path("bad.lcoalg");
    std::fs::write(&f, "space F = {a}\ncoproduct D on F: a -> <a,b>\n").unwrap();
    let o = lcoalg(&["check", &s(&f)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 2, column 27"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lcoalg(&["frob"]).code, 2);
    assert_eq!(lcoalg(&["fixtures", "zzz"]).code, 2);
    assert_eq!(lcoalg(&["check", "/nonexistent/x.lcoalg"]).code, 2);
    assert_eq!(lcoalg(&["check"]).code, 2);
    assert_eq!(lcoalg(&["--help"]).code, 0);
}

#[test]
fn unknown_axiom_or_binding_is_a_usage_error() {
    let d = Dir::new();
    let f = d.fixture("F", "F.lcoalg");
    assert_eq!(lcoalg(&["check", &f, "--axiom", "frobenius"]).code, 2);
    assert_eq!(lcoalg(&["check", &f, "--axiom", "coassoc", "--bind", "Delta=Nope"]).code, 2);
    assert_eq!(lcoalg(&["check", &f, "--axiom", "coassoc", "--bind", "Delta"]).code, 2);
}

#[test]
fn output_is_deterministic() {
    let d = Dir::new();
    let f = d.fixture("F", "F.lcoalg");
    let a = s(&d.path("a.lcoalg"));
    let b = s(&d.path("b.lcoalg"));
    let first = lcoalg(&["entangle", &f, "--out", &a]);
    let second = lcoalg(&["entangle", &f, "--out", &b]);
    assert_eq!(first, second);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(lcoalg(&["bracket", &f, "--constants"]), lcoalg(&["bracket", &f, "--constants"]));
}

#[test]
fn binary_exit_codes() {
    let d = Dir::new();
    let f = d.fixture("F", "F.lcoalg");
    let bin = env!("CARGO_BIN_EXE_lcoalg");
    let ok = Command::new(bin).args(["check", &f]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["check", "/nonexistent"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

fn coefficient() -> impl Strategy<Value = String> {
    prop_oneof![
        Just(String::new()),
        (-5i32..=5).prop_filter("nonzero", |c| *c != 0).prop_map(|c| format!("({c})*")),
        (1i32..=4, 2i32..=5).prop_map(|(n, d)| format!("({n}/{d})*")),
        Just("q*".to_string()),
        Just("(q^2 - 1)*".to_string()),
    ]
}

fn document() -> impl Strategy<Value = String> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            let term = (coefficient(), 0..n, 0..n);
            let row = prop::collection::vec(term, 1..=3);
            (Just(labels), prop::collection::vec(row, n), prop::collection::vec(-3i32..=3, n))
        })
        .prop_map(|(labels, rows, eps)| {
            let mut t = format!("space V = {{ {} }}\n\ncoproduct D on V:\n", labels.join(", "));
            for (l, terms) in labels.iter().zip(&rows) {
                let body: Vec<String> = terms.iter().map(|(c, i, j)| format!("{c}<{},{}>", labels[*i], labels[*j])).collect();
                t += &format!("  {l} -> {}\n", body.join(" + "));
            }
            t += "\ncounit eps on V:\n";
            for (l, e) in labels.iter().zip(&eps) {
                t += &format!("  {l} -> {e}\n");
            }
            t
        })
}

proptest! {
    #[test]
    fn unparse_is_a_fixed_point_of_parse(text in document()) {
        let doc = parse_lcoalg(&text).unwrap();
        let canonical = doc.to_string();
        let again = parse_lcoalg(&canonical).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_string(), canonical);
        prop_assert_eq!(again.structure("V").unwrap(), doc.structure("V").unwrap());
    }
}
