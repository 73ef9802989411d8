use lcoalg::coalgebra::AxiomReport;
use lcoalg::convolution::{
    bar_unit, bracket, check_associative, check_bar_unit, check_leibniz_poisson, conv_product, structure_constants, Convolution, Functional,
};
use lcoalg::exactlinalg::{BasisSpace, FiniteAlgebra, Label, Scalar, TensorVec};
use lcoalg::fixtures;

fn l(s: &str) -> Label {
    Label::new(s)
}

fn assert_pass(r: &AxiomReport) {
    assert!(r.passed(), "{}: {:?}", r.axiom(), r.witnesses().first());
}

type Table = Vec<(&'static str, TensorVec)>;

/// `δ1` and `δ̂1` of the self-entangled F, written out by hand.
fn hand_tables() -> (Table, Table) {
    let t = TensorVec::of;
    let c1 = [
        ("a", t(&[&["a", "a"], &["b", "c"]])),
        ("b", t(&[&["a", "b"], &["b", "d"]])),
        ("c", t(&[&["d", "c"], &["c", "a"]])),
        ("d", t(&[&["d", "d"], &["c", "b"]])),
    ];
    let mut vdash = c1.to_vec();
    vdash.extend([
        ("x", t(&[&["a", "x"], &["b", "z"]])),
        ("y", t(&[&["a", "y"], &["b", "u"]])),
        ("z", t(&[&["d", "z"], &["c", "x"]])),
        ("u", t(&[&["d", "u"], &["c", "y"]])),
    ]);
    let mut dashv = c1.to_vec();
    dashv.extend([
        ("x", t(&[&["x", "a"], &["y", "c"]])),
        ("y", t(&[&["x", "b"], &["y", "d"]])),
        ("z", t(&[&["u", "c"], &["z", "a"]])),
        ("u", t(&[&["u", "d"], &["z", "b"]])),
    ]);
    (vdash, dashv)
}

/// `[i*, j*] = Σ_l (coeff of i⊗j in δ̂1(l) − coeff of j⊗i in δ1(l)) l*`.
fn oracle_bracket(space: &BasisSpace, i: &str, j: &str) -> Functional {
    let (vdash, dashv) = hand_tables();
    let coeff = |rows: &[(&str, TensorVec)], at: &str, p: &str, q: &str| {
        rows.iter().find(|(k, _)| *k == at).map(|(_, v)| v.coeff(&[l(p), l(q)])).unwrap_or_default()
    };
    Functional::scalar(space, space.labels().iter().map(|k| (k.clone(), coeff(&dashv, k.as_str(), i, j) - coeff(&vdash, k.as_str(), j, i))))
}

#[test]
fn bracket_matches_termwise_oracle() {
    let e = fixtures::f_entangled();
    let c = Convolution::new(&e).unwrap();
    for i in e.space().labels() {
        for j in e.space().labels() {
            let got = c.bracket(&c.dual(i), &c.dual(j));
            assert_eq!(got, oracle_bracket(e.space(), i.as_str(), j.as_str()), "[{i}*, {j}*]");
        }
    }
}

#[test]
fn printed_bracket_values() {
    let e = fixtures::f_entangled();
    let c = Convolution::new(&e).unwrap();
    let s = |n: &str| c.dual(&l(n));
    let br = |a: &str, b: &str| bracket(&s(a), &s(b), &e).unwrap();
    let zero = Functional::zero(e.space());
    assert_eq!(br("a", "b"), s("b"));
    assert_eq!(br("b", "c"), s("a").sub(&s("d")));
    assert_eq!(br("a", "x"), zero);
    assert_eq!(br("y", "c"), s("x").sub(&s("u")));
    assert_eq!(br("c", "y"), zero);
}

/// The printed value is `x*`; both products contribute `x*` and cancel.
#[test]
fn x_star_a_star_is_zero() {
    let e = fixtures::f_entangled();
    let c = Convolution::new(&e).unwrap();
    let (x, a) = (c.dual(&l("x")), c.dual(&l("a")));
    assert_eq!(c.dashv(&x, &a), x);
    assert_eq!(c.vdash(&a, &x), x);
    assert!(c.bracket(&x, &a).is_zero());
}

#[test]
fn boundary_bracket_is_not_antisymmetric_off_c1() {
    let e = fixtures::f_entangled();
    let c = Convolution::new(&e).unwrap();
    let (y, cs) = (c.dual(&l("y")), c.dual(&l("c")));
    assert_ne!(c.bracket(&y, &cs), c.bracket(&cs, &y).scale(&Scalar::from_int(-1)));
    for i in e.c1().labels() {
        for j in e.c1().labels() {
            let (f, g) = (c.dual(i), c.dual(j));
            assert_eq!(c.bracket(&f, &g), c.bracket(&g, &f).scale(&Scalar::from_int(-1)));
        }
    }
}

#[test]
fn leibniz_poisson_suite() {
    let r = check_leibniz_poisson(&fixtures::f_entangled()).unwrap();
    assert_pass(&r);
}

#[test]
fn structure_constant_tables() {
    let e = fixtures::f_entangled();
    let sc = structure_constants(&e).unwrap();
    assert_pass(&sc.report());
    for v in e.c1().labels() {
        for w in e.c2().labels() {
            assert!(sc.mixed_bracket(v, w).unwrap().is_zero(), "[{v}*, {w}*]");
        }
    }
    assert_eq!(sc.b(&l("y"), &l("c"), &l("x")), Scalar::one());
    assert_eq!(sc.b(&l("y"), &l("c"), &l("u")), Scalar::from_int(-1));
    assert_eq!(sc.c(&l("b"), &l("c"), &l("a")), Scalar::one());
    assert_eq!(sc.c(&l("b"), &l("c"), &l("d")), Scalar::from_int(-1));
    assert_eq!(sc.c(&l("a"), &l("b"), &l("b")), Scalar::one());
}

#[test]
fn bar_unit_and_swapped_control() {
    let e = fixtures::f_entangled();
    let u = bar_unit(&e).unwrap();
    assert_pass(&u.report);
    let expected: Vec<(Label, Scalar)> = ["a", "d", "x", "u"].iter().map(|n| (l(n), Scalar::one())).collect();
    assert_eq!(u.unit, Functional::scalar(e.space(), expected));

    let c = Convolution::new(&e).unwrap();
    let swapped: Vec<(Label, Scalar)> = ["b", "c", "y", "z"].iter().map(|n| (l(n), Scalar::one())).collect();
    let r = check_bar_unit(&c, &Functional::scalar(e.space(), swapped));
    assert!(!r.passed());
}

#[test]
fn convolution_over_coassociative_coproducts_is_associative() {
    let e = fixtures::f_entangled();
    let c = Convolution::new(&e).unwrap();
    assert_pass(&check_associative(e.glued(), c.algebra(), &c.duals()));
    let f = fixtures::f();
    let fs: Vec<Functional> = f.space().labels().iter().map(|k| Functional::scalar(f.space(), [(k.clone(), Scalar::one())])).collect();
    assert_pass(&check_associative(f.get("Delta").unwrap(), &FiniteAlgebra::scalars(), &fs));
}

#[test]
fn algebra_valued_convolution() {
    let g = fixtures::cyclic_group(3);
    let a = fixtures::cyclic_group(2).algebra().unwrap().clone();
    let gen = TensorVec::label(&l("g1"));
    let f = Functional::new(g.space(), g.space().labels().iter().map(|k| (k.clone(), gen.clone())));
    let ff = conv_product(&f, &f, g.get("Delta").unwrap(), &a).unwrap();
    for k in g.space().labels() {
        assert_eq!(ff.value(k), TensorVec::label(&l("g0")));
    }
    assert_pass(&check_associative(g.get("Delta").unwrap(), &a, &[f.clone(), ff]));
}
