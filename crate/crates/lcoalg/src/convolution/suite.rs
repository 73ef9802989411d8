use std::collections::BTreeMap;

use crate::coalgebra::{solve_counit, Axiom, AxiomReport, CounitSide, Expr};
use crate::constructions::EntangledStructure;
use crate::exactlinalg::{BasisSpace, FiniteAlgebra, Label, LinearForm, MultiLinearMap, Scalar};

use super::{conv_product, Convolution, ConvolutionError, Functional, Op};

fn sum_product(space: &BasisSpace, alg: &FiniteAlgebra, maps: &[&MultiLinearMap], f: &Functional, g: &Functional) -> Functional {
    let mut out = Functional::zero(space);
    for m in maps {
        out = out.add(&conv_product(f, g, m, alg).expect("functionals on the ambient basis"));
    }
    out
}

/// Dualises an axiom over coproducts: `(A⊗id)B` becomes `(f∘_A g)∘_B h` and
/// `(id⊗A)B` becomes `f∘_B(g∘_A h)`. Every equation is tested on every
/// triple drawn from `fs`. Only axioms built from two-step composites are
/// supported.
pub fn check_dual_axiom(
    space: &BasisSpace,
    alg: &FiniteAlgebra,
    axiom: Axiom,
    maps: &[(&str, &MultiLinearMap)],
    fs: &[Functional],
) -> Result<AxiomReport, ConvolutionError> {
    let lookup = |roles: &[&'static str]| -> Result<Vec<&MultiLinearMap>, ConvolutionError> {
        roles
            .iter()
            .map(|r| {
                maps.iter()
                    .find(|(n, _)| n == r)
                    .map(|(_, m)| *m)
                    .ok_or_else(|| ConvolutionError::Unsupported(format!("unbound role `{r}`")))
            })
            .collect()
    };
    let eval = |e: &Expr, f: &Functional, g: &Functional, h: &Functional| -> Result<Functional, ConvolutionError> {
        match e {
            Expr::Then { inner, slot: 0, outer } => {
                let fg = sum_product(space, alg, &lookup(outer)?, f, g);
                Ok(sum_product(space, alg, &lookup(inner)?, &fg, h))
            }
            Expr::Then { inner, outer, .. } => {
                let gh = sum_product(space, alg, &lookup(outer)?, g, h);
                Ok(sum_product(space, alg, &lookup(inner)?, f, &gh))
            }
            other => Err(ConvolutionError::Unsupported(format!("{other:?}"))),
        }
    };
    let mut report = AxiomReport::new(format!("dual {}", axiom.id()));
    for e in axiom.equations() {
        for f in fs {
            for g in fs {
                for h in fs {
                    let lhs = eval(&e.lhs, f, g, h)?;
                    let rhs = eval(&e.rhs, f, g, h)?;
                    report.record(&e.name, format_args!("({f}, {g}, {h})"), &lhs, &rhs);
                }
            }
        }
    }
    Ok(report)
}

/// `(f·g)·h = f·(g·h)` on all triples from `fs`.
pub fn check_associative(cop: &MultiLinearMap, alg: &FiniteAlgebra, fs: &[Functional]) -> AxiomReport {
    let mut report = AxiomReport::new("convolution_assoc");
    let p = |f: &Functional, g: &Functional| conv_product(f, g, cop, alg).expect("functionals on the coproduct basis");
    for f in fs {
        for g in fs {
            let fg = p(f, g);
            for h in fs {
                report.record("assoc", format_args!("({f}, {g}, {h})"), &p(&fg, h), &p(f, &p(g, h)));
            }
        }
    }
    report
}

/// The dual suite on all triples of dual basis functionals: the dialgebra
/// and trialgebra relations of `⊣, ⊢, ⊥`, the Leibniz identity of the
/// bracket, the two Poisson laws with `• = ⊥`, and the dendriform relations
/// of `≺ = ⊣`, `≻ = ⊢ − ⊣`.
pub fn check_leibniz_poisson(e: &EntangledStructure) -> Result<AxiomReport, ConvolutionError> {
    let c = Convolution::new(e)?;
    let fs = c.duals();
    let (perp, dashv, vdash) = (c.coproduct(Op::Perp), c.coproduct(Op::Dashv), c.coproduct(Op::Vdash));
    let succ = vdash.sub(dashv).expect("same shape");
    let mut report = AxiomReport::new("leibniz_poisson");
    let space = c.space();
    let alg = c.algebra();
    report.absorb(check_dual_axiom(space, alg, Axiom::Codialgebra, &[("delta", vdash), ("delta_hat", dashv)], &fs)?);
    report.absorb(check_dual_axiom(space, alg, Axiom::Cotrialgebra, &[("Delta", perp), ("delta", vdash), ("delta_hat", dashv)], &fs)?);
    report.absorb(check_dual_axiom(space, alg, Axiom::DendriformCoalgebra, &[("delta", &succ), ("delta_hat", dashv)], &fs)?);
    for x in &fs {
        for y in &fs {
            let xy = c.bracket(x, y);
            let x_perp_y = c.perp(x, y);
            for z in &fs {
                let at = format_args!("({x}, {y}, {z})").to_string();
                let yz = c.bracket(y, z);
                let lhs = c.bracket(&xy, z);
                let rhs = c.bracket(&c.bracket(x, z), y).add(&c.bracket(x, &yz));
                report.record("leibniz: [[x,y],z] = [[x,z],y] + [x,[y,z]]", &at, &lhs, &rhs);

                let lhs = c.bracket(&x_perp_y, z);
                let rhs = c.perp(x, &yz).add(&c.perp(&c.bracket(x, z), y));
                report.record("poisson.1: [x•y,z] = x•[y,z] + [x,z]•y", &at, &lhs, &rhs);

                let comm = c.perp(y, z).sub(&c.perp(z, y));
                report.record("poisson.2: [x, y•z − z•y] = [x,[y,z]]", &at, &c.bracket(x, &comm), &c.bracket(x, &yz));
            }
        }
    }
    Ok(report)
}

/// Bracket tables of a self-entanglement in the dual bases `v*` of C1 and
/// `w*` of C2.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    c1: Vec<Label>,
    c2: Vec<Label>,
    /// `[w*_i, v*_j]`
    b: BTreeMap<(Label, Label), Functional>,
    /// `[v*_i, v*_j]`
    c: BTreeMap<(Label, Label), Functional>,
    /// `[v*_j, w*_i]`
    mixed: BTreeMap<(Label, Label), Functional>,
}

pub fn structure_constants(e: &EntangledStructure) -> Result<StructureConstants, ConvolutionError> {
    let conv = Convolution::new(e)?;
    let c1 = e.c1().labels().to_vec();
    let c2 = e.c2().labels().to_vec();
    let mut sc = StructureConstants { c1, c2, b: BTreeMap::new(), c: BTreeMap::new(), mixed: BTreeMap::new() };
    for v in &sc.c1 {
        for w in &sc.c2 {
            sc.b.insert((w.clone(), v.clone()), conv.bracket(&conv.dual(w), &conv.dual(v)));
            sc.mixed.insert((v.clone(), w.clone()), conv.bracket(&conv.dual(v), &conv.dual(w)));
        }
        for u in &sc.c1 {
            sc.c.insert((v.clone(), u.clone()), conv.bracket(&conv.dual(v), &conv.dual(u)));
        }
    }
    Ok(sc)
}

impl StructureConstants {
    /// `B^k_ij`: the coefficient of `w*_k` in `[w*_i, v*_j]`.
    pub fn b(&self, i: &Label, j: &Label, k: &Label) -> Scalar {
        self.b.get(&(i.clone(), j.clone())).map(|f| f.scalar_value(k)).unwrap_or_default()
    }

    /// `C^k_ij`: the coefficient of `v*_k` in `[v*_i, v*_j]`.
    pub fn c(&self, i: &Label, j: &Label, k: &Label) -> Scalar {
        self.c.get(&(i.clone(), j.clone())).map(|f| f.scalar_value(k)).unwrap_or_default()
    }

    pub fn b_bracket(&self, w: &Label, v: &Label) -> Option<&Functional> {
        self.b.get(&(w.clone(), v.clone()))
    }

    pub fn c_bracket(&self, v: &Label, u: &Label) -> Option<&Functional> {
        self.c.get(&(v.clone(), u.clone()))
    }

    pub fn mixed_bracket(&self, v: &Label, w: &Label) -> Option<&Functional> {
        self.mixed.get(&(v.clone(), w.clone()))
    }

    /// Checks that `[v*, w*]` vanishes, that `[w*, v*]` lies in the span of
    /// `w*` and `[v*, v*]` in the span of `v*`, and that the tables rebuild
    /// each bracket.
    pub fn report(&self) -> AxiomReport {
        let mut r = AxiomReport::new("structure_constants");
        let rebuild = |f: &Functional, basis: &[Label], coeff: &dyn Fn(&Label) -> Scalar| {
            basis.iter().fold(Functional::zero(f.space()), |acc, k| {
                acc.add(&Functional::dual(f.space(), k, FiniteAlgebra::scalars().unit()).scale(&coeff(k)))
            })
        };
        for ((v, w), f) in &self.mixed {
            let zero = Functional::zero(f.space());
            r.record("[v*,w*] = 0", format_args!("({v}*, {w}*)"), f, &zero);
        }
        for ((w, v), f) in &self.b {
            let g = rebuild(f, &self.c2, &|k| self.b(w, v, k));
            r.record("[w*_i,v*_j] = Σ B^k_ij w*_k", format_args!("({w}*, {v}*)"), f, &g);
        }
        for ((v, u), f) in &self.c {
            let g = rebuild(f, &self.c1, &|k| self.c(v, u, k));
            r.record("[v*_i,v*_j] = Σ C^k_ij v*_k", format_args!("({v}*, {u}*)"), f, &g);
        }
        r
    }
}

/// A two-sided unit `e = η∘ε*` for `⊣` on the right and `⊢` on the left,
/// with its verification on the dual basis.
#[derive(Clone, Debug)]
pub struct BarUnit {
    pub unit: Functional,
    pub report: AxiomReport,
}

/// Builds `e` from `eps_star` when the structure carries it, otherwise from
/// a right counit of the glued coproduct on C1 extended by `ε∘Φ⁻¹` on C2.
pub fn bar_unit(e: &EntangledStructure) -> Result<BarUnit, ConvolutionError> {
    let conv = Convolution::new(e)?;
    let star = match e.structure().counit("eps_star") {
        Some(s) => s.clone(),
        None => {
            let c1: Vec<Label> = e.c1().labels().to_vec();
            let eps = solve_counit(e.glued(), CounitSide::Right, &c1).ok_or(ConvolutionError::NoCounit)?;
            let phi = e.channel();
            LinearForm::from_values(e.space().labels().iter().map(|l| {
                let v = if e.c1().contains(l) { eps.value(l) } else { eps.eval(&phi.inverse(l)) };
                (l.clone(), v)
            }))
        }
    };
    let unit = conv.algebra().unit().clone();
    let f = Functional::new(e.space(), e.space().labels().iter().map(|l| (l.clone(), unit.scale(&star.value(l)))));
    let report = check_bar_unit(&conv, &f);
    Ok(BarUnit { unit: f, report })
}

/// `f⊣e = f = e⊢f` for every dual basis functional `f`.
pub fn check_bar_unit(conv: &Convolution, e: &Functional) -> AxiomReport {
    let mut r = AxiomReport::new("bar_unit");
    for f in conv.duals() {
        r.record("f⊣e = f", &f, &conv.dashv(&f, e), &f);
        r.record("e⊢f = f", &f, &conv.vdash(e, &f), &f);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dual_suite_on_f() {
        let r = check_leibniz_poisson(&fixtures::f_entangled()).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses().first());
        assert!(r.checked() >= 512 * 3);
    }

    #[test]
    fn unsupported_axiom() {
        let e = fixtures::f_entangled();
        let c = Convolution::new(&e).unwrap();
        let err = check_dual_axiom(c.space(), c.algebra(), Axiom::RightCounit, &[("Delta", e.glued())], &c.duals());
        assert!(matches!(err, Err(ConvolutionError::Unsupported(_))));
    }

    #[test]
    fn bar_unit_falls_back_to_solving() {
        let e = crate::constructions::self_entangle(&fixtures::f(), &fixtures::f_channel()).unwrap();
        let u = bar_unit(&e).unwrap();
        assert!(u.report.passed());
        assert_eq!(u.unit, bar_unit(&fixtures::f_entangled()).unwrap().unit);
    }
}
