//! Named example structures and channels used by tests, the guide and the
//! command line.

use crate::coalgebra::{solve_counit, CounitSide, LStructure};
use crate::constructions::{achiral_entangle, self_entangle, self_entangle_fixed, ChannelMap, EntangledStructure, Transport};
use crate::exactlinalg::{BasisSpace, FiniteAlgebra, Label, LinearForm, MultiLinearMap, Scalar, TensorVec};
use crate::graphs::{geometric_support, markov_coalgebra};

fn cop(space: &BasisSpace, rows: &[(&str, TensorVec)]) -> MultiLinearMap {
    MultiLinearMap::coproduct(space, rows.iter().map(|(l, v)| (Label::new(l), v.clone()))).expect("fixture labels")
}

fn t(tensors: &[&[&str]]) -> TensorVec {
    TensorVec::of(tensors)
}

/// The 2×2 matrix coalgebra on `a, b, c, d` (coproduct `Delta`).
pub fn f() -> LStructure {
    let s = BasisSpace::of(&["a", "b", "c", "d"]);
    let d = cop(
        &s,
        &[
            ("a", t(&[&["a", "a"], &["b", "c"]])),
            ("b", t(&[&["a", "b"], &["b", "d"]])),
            ("c", t(&[&["d", "c"], &["c", "a"]])),
            ("d", t(&[&["d", "d"], &["c", "b"]])),
        ],
    );
    LStructure::new(s).with_coproduct("Delta", d).unwrap()
}

/// [`f`] with the counit `eps` solved from `(id⊗ε)Δ = id`.
pub fn f_with_counit() -> LStructure {
    let s = f();
    let eps = solve_counit(s.get("Delta").unwrap(), CounitSide::Right, s.space().labels()).expect("F has a counit");
    s.with_counit("eps", eps).unwrap()
}

/// The Markov pair (`Delta`, `Delta_tilde`) of the geometric support of [`f`].
pub fn f_markov() -> LStructure {
    let g = geometric_support(&f(), &["Delta"]).unwrap();
    markov_coalgebra(&g).unwrap()
}

/// `a ↦ x, b ↦ y, c ↦ z, d ↦ u`.
pub fn f_channel() -> ChannelMap {
    ChannelMap::renaming(&[("a", "x"), ("b", "y"), ("c", "z"), ("d", "u")]).unwrap()
}

/// The copy of [`f`] on `x, y, z, u`.
pub fn f_prime() -> LStructure {
    f_channel().transport_structure(&f())
}

/// [`f_with_counit`] entangled with its copy through [`f_channel`].
pub fn f_entangled() -> EntangledStructure {
    self_entangle(&f_with_counit(), &f_channel()).unwrap()
}

/// The generator coalgebra of `Sl_q(2)`: `Delta` as in [`f`] and the
/// achiral partner `Delta_tilde`.
pub fn slq2() -> LStructure {
    let s = f();
    let dt = cop(
        s.space(),
        &[
            ("a", t(&[&["b", "a"], &["a", "c"]])),
            ("b", t(&[&["b", "b"], &["a", "d"]])),
            ("c", t(&[&["c", "c"], &["d", "a"]])),
            ("d", t(&[&["c", "d"], &["d", "b"]])),
        ],
    );
    s.with_coproduct("Delta_tilde", dt).unwrap()
}

/// `a ↦ y, b ↦ x, c ↦ u, d ↦ z`.
pub fn slq2_channel() -> ChannelMap {
    ChannelMap::renaming(&[("a", "y"), ("b", "x"), ("c", "u"), ("d", "z")]).unwrap()
}

/// The achiral entanglement of `Sl_q(2)` with its image under
/// [`slq2_channel`], `Δ̃₂` transported from `Δ₁`.
pub fn slq2_entangled() -> EntangledStructure {
    achiral_entangle(&slq2(), &slq2_channel(), Transport::Plain).unwrap()
}

/// The chiral self-entanglement of the `Sl_q(2)` generator coalgebra
/// through [`slq2_channel`].
pub fn slq2_self_entangled() -> EntangledStructure {
    self_entangle(&f_with_counit(), &slq2_channel()).unwrap()
}

/// The generator coalgebra of `SU_2(q)` on `a, c, a_star, c_star` with the
/// pair `Delta`, `Delta_tilde`.
pub fn su2q() -> LStructure {
    let s = BasisSpace::of(&["a", "c", "a_star", "c_star"]);
    let q = Scalar::q();
    let qi = Scalar::q_pow(-1);
    let lin = |terms: &[(Scalar, [&str; 2])]| {
        TensorVec::from_terms(terms.iter().map(|(c, p)| (c.clone(), vec![Label::new(p[0]), Label::new(p[1])])))
    };
    let one = Scalar::one();
    let d = cop(
        &s,
        &[
            ("a", lin(&[(one.clone(), ["a", "a"]), (-&q, ["c_star", "c"])])),
            ("c", lin(&[(one.clone(), ["c", "a"]), (one.clone(), ["a_star", "c"])])),
            ("a_star", lin(&[(one.clone(), ["a_star", "a_star"]), (-&q, ["c", "c_star"])])),
            ("c_star", lin(&[(one.clone(), ["c_star", "a_star"]), (one.clone(), ["a", "c_star"])])),
        ],
    );
    let dt = cop(
        &s,
        &[
            ("a", lin(&[(one.clone(), ["c_star", "a"]), (one.clone(), ["a", "c"])])),
            ("c", lin(&[(one.clone(), ["c", "c"]), (-&qi, ["a_star", "a"])])),
            ("a_star", lin(&[(one.clone(), ["c", "a_star"]), (one.clone(), ["a_star", "c_star"])])),
            ("c_star", lin(&[(-&qi, ["a", "a_star"]), (one, ["c_star", "c_star"])])),
        ],
    );
    LStructure::new(s).with_coproduct("Delta", d).unwrap().with_coproduct("Delta_tilde", dt).unwrap()
}

/// `a ↦ z_star, a_star ↦ z, c_star ↦ −q⁻¹x, c ↦ −q⁻¹x_star`.
pub fn su2q_channel() -> ChannelMap {
    let src = BasisSpace::of(&["a", "c", "a_star", "c_star"]);
    let dst = BasisSpace::of(&["z", "x", "z_star", "x_star"]);
    let m = -Scalar::q_pow(-1);
    ChannelMap::new(
        src,
        dst,
        [
            ("a".into(), t(&[&["z_star"]])),
            ("a_star".into(), t(&[&["z"]])),
            ("c_star".into(), t(&[&["x"]]).scale(&m)),
            ("c".into(), t(&[&["x_star"]]).scale(&m)),
        ],
    )
    .unwrap()
}

/// A group algebra as a bialgebra: group-like `Delta`, counit `eps` equal to
/// one on every element, and the product.
pub fn group_bialgebra<F: Fn(usize, usize) -> usize>(names: &[Label], op: F, identity: usize) -> LStructure {
    let alg = FiniteAlgebra::group(names, op, identity).expect("group table");
    let space = alg.space().clone();
    let d = MultiLinearMap::coproduct(&space, names.iter().map(|g| (g.clone(), TensorVec::basis(vec![g.clone(), g.clone()])))).unwrap();
    let eps = LinearForm::from_values(names.iter().map(|g| (g.clone(), Scalar::one())));
    LStructure::new(space).with_coproduct("Delta", d).unwrap().with_counit("eps", eps).unwrap().with_algebra(alg).unwrap()
}

/// `ℤ/n` on `g0 … g{n−1}`.
pub fn cyclic_group(n: usize) -> LStructure {
    let names: Vec<Label> = (0..n).map(|i| Label::from(format!("g{i}"))).collect();
    group_bialgebra(&names, |i, j| (i + j) % n, 0)
}

/// `ℤ/3 × ℤ/2` with `C1 = ℤ/3 = {g0, g1, g2}` and `Φ(g) = s·g` onto the
/// other coset `{sg0, sg1, sg2}`; the product of the whole group is
/// attached.
pub fn shift_entanglement() -> EntangledStructure {
    let names: Vec<Label> = ["g0", "g1", "g2", "sg0", "sg1", "sg2"].iter().map(|s| Label::new(s)).collect();
    let op = |i: usize, j: usize| {
        let (gi, si) = (i % 3, i / 3);
        let (gj, sj) = (j % 3, j / 3);
        (gi + gj) % 3 + 3 * ((si + sj) % 2)
    };
    let whole = FiniteAlgebra::group(&names, op, 0).unwrap();
    let phi = ChannelMap::renaming(&[("g0", "sg0"), ("g1", "sg1"), ("g2", "sg2")]).unwrap();
    self_entangle(&cyclic_group(3), &phi).unwrap().with_algebra(whole).unwrap()
}

/// `ℤ/3 × ℤ/3` on `g{i}{j}` with `C1 = {g00, g10, g20}` and the diagonal
/// channel `g{i}0 ↦ g{i}{i}`, which fixes the unit `g00`.
pub fn diagonal_entanglement() -> EntangledStructure {
    let names: Vec<Label> = (0..9).map(|k| Label::from(format!("g{}{}", k / 3, k % 3))).collect();
    let op = |i: usize, j: usize| 3 * ((i / 3 + j / 3) % 3) + (i % 3 + j % 3) % 3;
    let whole = FiniteAlgebra::group(&names, op, 0).unwrap();
    let c1_names = [names[0].clone(), names[3].clone(), names[6].clone()];
    let c1 = group_bialgebra(&c1_names, |i, j| (i + j) % 3, 0);
    let phi = diagonal_channel();
    self_entangle_fixed(&c1, &phi).unwrap().with_algebra(whole).unwrap()
}

/// `g00 ↦ g00, g10 ↦ g11, g20 ↦ g22`.
pub fn diagonal_channel() -> ChannelMap {
    ChannelMap::renaming(&[("g00", "g00"), ("g10", "g11"), ("g20", "g22")]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::check;

    #[test]
    fn f_counit_is_a_plus_d() {
        let e = f_with_counit();
        let eps = e.counit("eps").unwrap();
        let vals: Vec<Scalar> = ["a", "b", "c", "d"].iter().map(|l| eps.value(&Label::new(l))).collect();
        assert_eq!(vals, vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn f_prime_coproduct() {
        assert_eq!(f_prime().get("Delta").unwrap().at_name("x"), t(&[&["x", "x"], &["y", "z"]]));
    }

    #[test]
    fn group_fixtures_are_bialgebras() {
        for n in [2, 3] {
            let g = cyclic_group(n);
            assert!(check(&g, "coassoc", &[("Delta", "Delta")]).unwrap().passed());
            assert!(check(&g, "right_counit", &[("Delta", "Delta"), ("eps", "eps")]).unwrap().passed());
        }
    }

    #[test]
    fn diagonal_fixes_unit() {
        assert_eq!(diagonal_channel().fixed_labels(), vec![Label::new("g00")]);
        assert_eq!(diagonal_entanglement().space().dim(), 5);
    }
}
