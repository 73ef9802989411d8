use lcoalg::complex::{
    boundary, check_complex, check_complex_form, check_ito, compare_forms, flower_coproducts, primitives, resolve_signs, BoundaryForm,
    ComplexError, FlowerStructure,
};
use lcoalg::constructions::{cibils_structures, Indexing};
use lcoalg::exactlinalg::{Label, Scalar, TensorVec};
use lcoalg::fixtures::cyclic_group;

fn flower(n: usize) -> FlowerStructure {
    flower_coproducts(&cyclic_group(n), &Label::new("g0")).unwrap()
}

fn g(i: usize) -> Label {
    Label::from(format!("g{i}"))
}

/// Faces of `g_{i₁}⊗…⊗g_{i_k}` written on index tuples: `−g₀⊗t`,
/// `(−1)^{i+1}` times `t` with slot `i` doubled, and `(−1)^{k} t⊗g₀`.
fn oracle_boundary(t: &[usize]) -> TensorVec {
    let k = t.len();
    let mut terms: Vec<(Scalar, Vec<usize>)> = Vec::new();
    let mut front = vec![0];
    front.extend_from_slice(t);
    terms.push((Scalar::from_int(-1), front));
    for i in 1..=k {
        let mut v = t[..i].to_vec();
        v.extend_from_slice(&t[i - 1..]);
        terms.push((Scalar::from_int(if i.is_multiple_of(2) { -1 } else { 1 }), v));
    }
    let mut back = t.to_vec();
    back.push(0);
    terms.push((Scalar::from_int(if k.is_multiple_of(2) { 1 } else { -1 }), back));
    TensorVec::from_terms(terms.into_iter().map(|(c, v)| (c, v.into_iter().map(g).collect())))
}

fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n.pow(k as u32))
        .map(|mut x| {
            (0..k)
                .map(|_| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect()
        })
        .collect()
}

#[test]
fn primary_boundary_matches_face_oracle() {
    for n in [2, 3] {
        let f = flower(n);
        for deg in 1..=3 {
            let op = boundary(deg, &f, BoundaryForm::Primary).unwrap();
            for t in tuples(n, deg + 1) {
                let key: Vec<Label> = t.iter().map(|&i| g(i)).collect();
                assert_eq!(op.map().image(&key).into_owned(), oracle_boundary(&t), "ℤ/{n}, ∂{deg} at {t:?}");
            }
        }
    }
}

#[test]
fn d1_displayed_form() {
    let f = flower(3);
    let (l, r) = (f.d_left().unwrap(), f.d_right().unwrap());
    let d1 = l.at_slot(2, 0).unwrap().sub(&r.at_slot(2, 1).unwrap()).unwrap();
    assert_eq!(boundary(1, &f, BoundaryForm::Primary).unwrap().map(), &d1);
}

#[test]
fn d0_on_z3() {
    let f = flower(3);
    let d0 = boundary(0, &f, BoundaryForm::Primary).unwrap();
    assert_eq!(d0.map().at_name("g0"), TensorVec::of(&[&["g0", "g0"]]).scale(&Scalar::from_int(-1)));
    assert_eq!(d0.map().at_name("g1"), &TensorVec::of(&[&["g1", "g1"]]) - &TensorVec::of(&[&["g1", "g0"], &["g0", "g1"]]));
}

#[test]
fn complexes_square_to_zero() {
    let r3 = check_complex(&flower(3), 3).unwrap();
    assert!(r3.report.passed(), "{:?}", r3.report.witnesses().first());
    let r2 = check_complex(&flower(2), 4).unwrap();
    assert!(r2.report.passed(), "{:?}", r2.report.witnesses().first());
    assert_eq!(r3.ranks[0].rank, 3);
    assert_eq!(r3.ranks[0].kernel, 0);
    for row in &r3.ranks {
        assert_eq!(row.rank + row.kernel, row.source_dim);
    }
}

#[test]
fn prime_complex_squares_to_zero() {
    for n in [2, 3] {
        let r = check_complex_form(&flower(n), 3, BoundaryForm::Prime).unwrap();
        assert!(r.report.passed());
    }
}

#[test]
fn alternative_form_agrees_with_primary() {
    for n in [2, 3] {
        assert!(compare_forms(&flower(n), BoundaryForm::Alternative, BoundaryForm::Primary, 3).unwrap().passed());
    }
}

#[test]
fn printed_forms_fail_sign_resolution() {
    let c = resolve_signs(&flower(3), 2).unwrap();
    let accepted: Vec<BoundaryForm> = c.iter().filter(|s| s.accepted()).map(|s| s.form).collect();
    assert_eq!(accepted, vec![BoundaryForm::Primary, BoundaryForm::Alternative]);
    let printed = c.iter().find(|s| s.form == BoundaryForm::PrintedPrimary).unwrap();
    assert!(!printed.matches_d1);
    let constant = c.iter().find(|s| s.form == BoundaryForm::PrintedAlternative).unwrap();
    assert!(!constant.accepted());
}

#[test]
fn markov_and_interchange() {
    for n in [2, 3] {
        assert!(flower(n).markov_report().passed());
    }
}

#[test]
fn flower_ito_derivatives() {
    let f = flower(3);
    let r = check_ito(&f.d_right().unwrap(), f.structure(), f.delta_f()).unwrap();
    assert!(r.passed());
    assert_eq!(r.checked(), 10);
    assert!(f.ito_report().unwrap().passed());
    let unit = TensorVec::label(&g(0));
    assert!(f.d_left().unwrap().apply(&unit).is_zero());
}

#[test]
fn ito_against_wrong_comodule_fails() {
    let f = flower(3);
    assert!(!check_ito(&f.d_right().unwrap(), f.structure(), f.delta_f_tilde()).unwrap().passed());
}

#[test]
fn group_algebras_have_no_primitives() {
    assert!(primitives(&flower(3)).unwrap().is_empty());
}

#[test]
fn guards() {
    let cib = cibils_structures(3, &Scalar::q(), Indexing::Truncated).unwrap();
    let a = cib.codialgebra.clone();
    assert!(matches!(flower_coproducts(&a, &Label::new("a1")), Err(ComplexError::NotGroupLike(_))));
    assert!(matches!(check_ito(&flower(3).d_right().unwrap(), &a, flower(3).delta_f()), Err(ComplexError::NoAlgebra)));
}
