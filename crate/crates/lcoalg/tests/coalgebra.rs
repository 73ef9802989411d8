use lcoalg::coalgebra::{check, dichotomy_sum, LStructure};
use lcoalg::constructions::{cibils_structures, de_bruijn_codialgebra, Indexing};
use lcoalg::exactlinalg::{map_equal, Scalar};
use lcoalg::fixtures;

fn structures() -> Vec<(String, LStructure)> {
    let mut v = vec![
        ("F".to_string(), fixtures::f_with_counit()),
        ("F markov".into(), fixtures::f_markov()),
        ("self-entangled F".into(), fixtures::f_entangled().structure().clone()),
        ("slq2".into(), fixtures::slq2()),
        ("achiral slq2".into(), fixtures::slq2_entangled().structure().clone()),
        ("su2q".into(), fixtures::su2q()),
        ("Z/3".into(), fixtures::cyclic_group(3)),
    ];
    for n in [2, 3] {
        v.push((format!("de Bruijn {n}"), de_bruijn_codialgebra(n).unwrap()));
    }
    for q in [Scalar::q(), Scalar::from_int(2)] {
        let c = cibils_structures(3, &q, Indexing::Truncated).unwrap();
        let sum = dichotomy_sum(&c.dendriform, "delta", "delta_hat").unwrap();
        v.push((format!("cibils codialgebra q={q}"), c.codialgebra));
        v.push((format!("cibils dendriform q={q}"), c.dendriform.with_coproduct("sum", sum).unwrap()));
    }
    v
}

fn names(s: &LStructure) -> Vec<String> {
    s.coproducts().map(|(n, _)| n.clone()).collect()
}

fn passes(s: &LStructure, axiom: &str, pairs: &[(&str, &str)]) -> bool {
    check(s, axiom, pairs).unwrap().passed()
}

#[test]
fn codialgebras_are_codipterous_both_ways() {
    let mut premises = 0;
    for (label, s) in structures() {
        for a in names(&s) {
            for b in names(&s) {
                if !passes(&s, "codialgebra", &[("delta", &a), ("delta_hat", &b)]) {
                    continue;
                }
                premises += 1;
                assert!(passes(&s, "codipterous", &[("Delta", &b), ("delta", &a)]), "{label}: ({a}, {b})");
                assert!(passes(&s, "anti_codipterous", &[("Delta", &a), ("delta_hat", &b)]), "{label}: ({a}, {b})");
            }
        }
    }
    assert!(premises >= 4, "only {premises} codialgebra pairs");
}

#[test]
fn pre_dendriform_with_sum_is_dendriform() {
    let mut premises = 0;
    for (label, s) in structures() {
        for d in names(&s) {
            for a in names(&s) {
                for b in names(&s) {
                    let sum = s.get(&a).unwrap().add(s.get(&b).unwrap()).unwrap();
                    if !map_equal(s.get(&d).unwrap(), &sum).unwrap() {
                        continue;
                    }
                    if !passes(&s, "pre_dendriform", &[("Delta", &d), ("delta", &a), ("delta_hat", &b)]) {
                        continue;
                    }
                    premises += 1;
                    assert!(passes(&s, "dendriform_coalgebra", &[("delta", &a), ("delta_hat", &b)]), "{label}: {d} = {a} + {b}");
                }
            }
        }
    }
    assert!(premises >= 2, "only {premises} pre-dendriform triples");
}

#[test]
fn counits_are_solved_not_assumed() {
    use lcoalg::coalgebra::{solve_counit, CounitSide};
    let f = fixtures::f();
    let d = f.get("Delta").unwrap();
    let eps = solve_counit(d, CounitSide::Right, f.space().labels()).unwrap();
    let s = f.clone().with_counit("eps", eps.clone()).unwrap();
    assert!(passes(&s, "right_counit", &[("Delta", "Delta"), ("eps", "eps")]));
    assert_eq!(&eps, fixtures::f_with_counit().counit("eps").unwrap());
}
