//! The natural lift of an undirected graph and coassociative coverings.

use std::collections::BTreeMap;

use super::{support_of, GraphError, UndirectedGraph, WeightedDigraph};
use crate::coalgebra::{Axiom, AxiomReport, Bound, Witness};
use crate::exactlinalg::{Label, MultiLinearMap, Scalar, TensorVec};

/// The directed double of an undirected graph together with the family of
/// coproducts covering it.
#[derive(Clone, Debug)]
pub struct NaturalLift {
    pub digraph: WeightedDigraph,
    /// `Delta_l` first, then one `delta_v_w` per arrow `v → w` with `v ≠ w`.
    pub family: Vec<(String, MultiLinearMap)>,
}

/// Builds `G♮` (each edge doubled, one loop per vertex) and the coproducts
/// `Δ_l v = v⊗v`, `δ_vw(v) = v⊗v`, `δ_vw(w) = v⊗w`.
pub fn natural_lift(g: &UndirectedGraph) -> Result<NaturalLift, GraphError> {
    let mut digraph = WeightedDigraph::new(g.vertices().to_vec())?;
    let space = digraph.space()?;
    let one = Scalar::one();
    for v in g.vertices() {
        digraph.add_arrow(v, v, &one)?;
    }
    for (u, v) in g.edges() {
        if u != v {
            digraph.add_arrow(u, v, &one)?;
            digraph.add_arrow(v, u, &one)?;
        }
    }
    let pair = |x: &Label, y: &Label| TensorVec::basis(vec![x.clone(), y.clone()]);
    let delta_l = MultiLinearMap::coproduct(&space, g.vertices().iter().map(|v| (v.clone(), pair(v, v)))).expect("vertex labels");
    let mut family = vec![("Delta_l".to_string(), delta_l)];
    for (v, w, _) in digraph.arrows() {
        if v == w {
            continue;
        }
        let bridge = MultiLinearMap::coproduct(&space, [(v.clone(), pair(v, v)), (w.clone(), pair(v, w))]).expect("vertex labels");
        family.push((format!("delta_{v}_{w}"), bridge));
    }
    Ok(NaturalLift { digraph, family })
}

/// Rejected before the covering test runs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoveringError {
    #[error("family member `{0}` is not coassociative")]
    NotCoassociative(String),
    #[error("family member `{0}` lives on a different basis")]
    SpaceMismatch(String),
}

/// Checks that `family` is a coassociative covering of `g`: the supports
/// cover `g` with matching weights, and on every arrow `u → w` shared by two
/// members the coefficient of `u⊗w` in their images of `u` agree.
pub fn covering_check(g: &WeightedDigraph, family: &[(String, MultiLinearMap)]) -> Result<AxiomReport, CoveringError> {
    let space = g.space().map_err(|_| CoveringError::SpaceMismatch(String::new()))?;
    let mut supports = Vec::new();
    for (name, m) in family {
        if m.space() != &space {
            return Err(CoveringError::SpaceMismatch(name.clone()));
        }
        let bound = Bound::maps(Axiom::Coassoc, &[("Delta", m)], &[]).expect("role provided");
        if !bound.check(Axiom::Coassoc, space.labels()).passed() {
            return Err(CoveringError::NotCoassociative(name.clone()));
        }
        supports.push(support_of(&space, [m]));
    }

    let mut report = AxiomReport::new("covering");
    let mut covered: BTreeMap<(Label, Label), Vec<usize>> = BTreeMap::new();
    for (i, sup) in supports.iter().enumerate() {
        for (s, t, _) in sup.arrows() {
            covered.entry((s.clone(), t.clone())).or_default().push(i);
        }
    }
    for (s, t, w) in g.arrows() {
        let at = format!("{s}->{t}");
        match covered.get(&(s.clone(), t.clone())) {
            None => report.fail(Witness { equation: "union".into(), at, lhs: w.to_string(), rhs: "uncovered".into() }),
            Some(members) => {
                for &i in members {
                    report.record(&format!("weight[{}]", family[i].0), &at, w, &supports[i].weight(s, t));
                }
            }
        }
    }
    for (s, t) in covered.keys() {
        if !g.has_arrow(s, t) {
            report.fail(Witness { equation: "union".into(), at: format!("{s}->{t}"), lhs: "absent".into(), rhs: "covered".into() });
        }
    }
    for ((s, t), members) in &covered {
        let key = [s.clone(), t.clone()];
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                let ci = family[i].1.at(s).coeff(&key);
                let cj = family[j].1.at(s).coeff(&key);
                let eq = format!("overlap[{},{}]", family[i].0, family[j].0);
                report.record(&eq, format!("{s}->{t}"), &ci, &cj);
            }
        }
    }
    Ok(report)
}

/// The Petersen graph on `p0 … p9`: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> UndirectedGraph {
    let vs: Vec<Label> = (0..10).map(|i| Label::from(format!("p{i}"))).collect();
    let mut g = UndirectedGraph::new(vs.clone()).expect("distinct labels");
    for i in 0..5 {
        g.add_edge(&vs[i], &vs[(i + 1) % 5]).unwrap();
        g.add_edge(&vs[i], &vs[i + 5]).unwrap();
        g.add_edge(&vs[5 + i], &vs[5 + (i + 2) % 5]).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        for v in g.vertices() {
            let deg = g.edges().filter(|(a, b)| a == v || b == v).count();
            assert_eq!(deg, 3);
        }
    }

    #[test]
    fn lift_of_single_edge() {
        let mut g = UndirectedGraph::new(vec!["u".into(), "v".into()]).unwrap();
        g.add_edge(&"u".into(), &"v".into()).unwrap();
        let lift = natural_lift(&g).unwrap();
        assert_eq!(lift.digraph.arrow_count(), 4);
        let (_, d_uv) = lift.family.iter().find(|(n, _)| n == "delta_u_v").unwrap();
        assert_eq!(d_uv.at_name("v"), TensorVec::of(&[&["u", "v"]]));
        assert!(covering_check(&lift.digraph, &lift.family).unwrap().passed());
    }

    #[test]
    fn lift_of_isolated_vertex() {
        let g = UndirectedGraph::new(vec!["v".into()]).unwrap();
        let lift = natural_lift(&g).unwrap();
        assert_eq!(lift.family.len(), 1);
        assert_eq!(lift.digraph.loop_count(), 1);
    }

    #[test]
    fn existing_loop_is_not_doubled() {
        let mut g = UndirectedGraph::new(vec!["v".into()]).unwrap();
        g.add_edge(&"v".into(), &"v".into()).unwrap();
        let lift = natural_lift(&g).unwrap();
        assert_eq!(lift.digraph.weight(&"v".into(), &"v".into()), Scalar::one());
    }

    #[test]
    fn non_coassociative_member_is_rejected() {
        let g = WeightedDigraph::of(&["u", "v"], &[("u", "v")]).unwrap();
        let space = g.space().unwrap();
        let bad = MultiLinearMap::coproduct(&space, [("u".into(), TensorVec::of(&[&["u", "v"]]))]).unwrap();
        assert_eq!(covering_check(&g, &[("bad".into(), bad)]).unwrap_err(), CoveringError::NotCoassociative("bad".into()));
    }
}
