use std::collections::BTreeMap;

use lcoalg::exactlinalg::{Label, Scalar};
use lcoalg::fixtures::{slq2_entangled, slq2_self_entangled};
use lcoalg::ncpoly::{
    all_orientations, asserted_identities, check_bridge_homomorphism, check_l_hopf, nc_normalize, relation_set, slq2_antipodes,
    AntipodeData, HopfError, NCPoly, RewriteSystem,
};

fn p(names: &[&str]) -> NCPoly {
    NCPoly::of(names)
}

fn both() -> RewriteSystem {
    let (r1, _) = relation_set("slq2").unwrap();
    let (r2, _) = relation_set("slq2_tilde").unwrap();
    r1.union(&r2)
}

#[test]
fn determinant_is_one() {
    let (r, _) = relation_set("slq2").unwrap();
    let det = p(&["a", "d"]).sub(&p(&["b", "c"]).scale(&Scalar::q_pow(-1))).sub(&NCPoly::one());
    assert!(nc_normalize(&det, &r).unwrap().is_zero());
    let det_left = p(&["d", "a"]).sub(&p(&["b", "c"]).scale(&Scalar::q())).sub(&NCPoly::one());
    assert!(nc_normalize(&det_left, &r).unwrap().is_zero());
}

#[test]
fn ba_and_q_ab_share_a_normal_form() {
    let (r, _) = relation_set("slq2").unwrap();
    let lhs = nc_normalize(&p(&["b", "a"]), &r).unwrap();
    let rhs = nc_normalize(&p(&["a", "b"]).scale(&Scalar::q()), &r).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, p(&["b", "a"]));
}

#[test]
fn tilde_relations_are_the_renamed_copy() {
    let (r, g) = relation_set("slq2_tilde").unwrap();
    assert_eq!(g, ["y", "x", "u", "z"].map(Label::new).to_vec());
    let det = p(&["y", "z"]).sub(&p(&["x", "u"]).scale(&Scalar::q_pow(-1))).sub(&NCPoly::one());
    assert!(nc_normalize(&det, &r).unwrap().is_zero());
    assert_eq!(nc_normalize(&p(&["u", "x"]), &r).unwrap(), p(&["x", "u"]));
}

#[test]
fn relation_sets_are_confluent() {
    for name in ["slq2", "slq2_tilde"] {
        let (r, _) = relation_set(name).unwrap();
        for c in r.critical_pairs().unwrap() {
            assert!(c.resolves(), "{name}: {:?}", c.word);
        }
    }
    assert!(both().critical_pairs().unwrap().iter().all(|c| c.resolves()));
}

#[test]
fn normal_forms_are_idempotent_on_long_words() {
    let r = both();
    let w = p(&["d", "d", "c", "a", "b", "a"]).add(&p(&["z", "y", "u", "x"]));
    let once = nc_normalize(&w, &r).unwrap();
    assert_eq!(nc_normalize(&once, &r).unwrap(), once);
    assert!(once.iter().all(|(w, _)| r.is_normal(w)));
}

#[test]
fn achiral_bridges_are_homomorphisms() {
    let e = slq2_entangled();
    let rep = check_bridge_homomorphism(&e, &both(), &["Delta_star", "delta1", "delta2_tilde"]).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.checked(), 3 * (1 + 32));
}

#[test]
fn chiral_bridges_are_homomorphisms() {
    let e = slq2_self_entangled();
    let rep = check_bridge_homomorphism(&e, &both(), &["Delta_star", "delta1", "delta1_hat", "delta2", "delta2_hat"]).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn achiral_l_hopf_identities() {
    let e = slq2_entangled();
    let s = slq2_antipodes(&e).unwrap();
    let rep = check_l_hopf(&e, &s, &both(), &asserted_identities(&e)).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.checked(), 2 * 8);
}

#[test]
fn chiral_l_hopf_identities() {
    let e = slq2_self_entangled();
    let s = slq2_antipodes(&e).unwrap();
    let ids = asserted_identities(&e);
    assert_eq!(ids.len(), 4);
    let rep = check_l_hopf(&e, &s, &both(), &ids).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.checked(), 4 * 8);
}

#[test]
fn eps_star_is_one_on_the_diagonal_generators() {
    let e = slq2_entangled();
    let s = slq2_antipodes(&e).unwrap();
    for (l, v) in [("a", 1), ("d", 1), ("y", 1), ("z", 1), ("b", 0), ("c", 0), ("x", 0), ("u", 0)] {
        assert_eq!(s.eps_star().value(&Label::new(l)), Scalar::from_int(v), "{l}");
    }
}

#[test]
fn off_diagonal_cancellation() {
    // x ↦ a(−qb) + b·a at the right antipode of the first bridge.
    let (r, _) = relation_set("slq2").unwrap();
    let t = p(&["a", "b"]).scale(&-Scalar::q()).add(&p(&["b", "a"]));
    assert!(nc_normalize(&t, &r).unwrap().is_zero());
}

#[test]
fn orientation_survey_includes_the_asserted_ones() {
    for e in [slq2_entangled(), slq2_self_entangled()] {
        let s = slq2_antipodes(&e).unwrap();
        let all = all_orientations(&e);
        assert_eq!(all.len(), 4 * e.bridges().len());
        let asserted = asserted_identities(&e);
        for id in &all {
            let ok = check_l_hopf(&e, &s, &both(), std::slice::from_ref(id)).unwrap().passed();
            if asserted.contains(id) {
                assert!(ok, "{id}");
            }
        }
    }
}

#[test]
fn zero_normalises_to_zero() {
    assert!(nc_normalize(&NCPoly::zero(), &both()).unwrap().is_zero());
}

#[test]
fn missing_antipode_is_reported() {
    let e = slq2_entangled();
    let one = |l: &str| (Label::new(l), NCPoly::of(&[l]));
    let s1: BTreeMap<_, _> = ["a", "b", "c"].into_iter().map(one).collect();
    let s2: BTreeMap<_, _> = ["x", "y", "z", "u"].into_iter().map(one).collect();
    assert_eq!(AntipodeData::new(&e, s1, s2).unwrap_err(), HopfError::MissingAntipode(Label::new("d")));
}
