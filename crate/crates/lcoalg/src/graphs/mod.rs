//! Weighted digraphs and their coalgebras: Markov structures, geometric
//! supports, De Bruijn graphs and coassociative coverings.

mod io;
mod lift;

use std::collections::{BTreeMap, BTreeSet};

pub use io::{dot_export, parse_digraph, parse_undirected, EdgeListError};
pub use lift::{covering_check, natural_lift, petersen, CoveringError, NaturalLift};

use crate::coalgebra::{LStructure, StructureError};
use crate::exactlinalg::{BasisSpace, Label, MultiLinearMap, Scalar, TensorVec};

/// Errors from building graphs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex `{0}` is declared twice")]
    DuplicateVertex(Label),
    #[error("vertex `{0}` is not declared")]
    UnknownVertex(Label),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("the edge {0} -- {1} is declared twice")]
    DuplicateEdge(Label, Label),
}

/// A digraph whose arrows carry scalar weights. Parallel arrows are merged by
/// summing their weights and zero-weight arrows are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    vertices: Vec<Label>,
    arrows: BTreeMap<(Label, Label), Scalar>,
}

impl WeightedDigraph {
    pub fn new(vertices: Vec<Label>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        Ok(WeightedDigraph { vertices, arrows: BTreeMap::new() })
    }

    /// Builds a digraph from vertex names and unit-weight arrows.
    pub fn of(vertices: &[&str], arrows: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut g = WeightedDigraph::new(vertices.iter().map(|v| Label::new(v)).collect())?;
        for (s, t) in arrows {
            g.add_arrow(&Label::new(s), &Label::new(t), &Scalar::one())?;
        }
        Ok(g)
    }

    fn has_vertex(&self, v: &Label) -> bool {
        self.vertices.contains(v)
    }

    /// Adds `w` to the weight of `s → t`.
    pub fn add_arrow(&mut self, s: &Label, t: &Label, w: &Scalar) -> Result<(), GraphError> {
        for v in [s, t] {
            if !self.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v.clone()));
            }
        }
        let key = (s.clone(), t.clone());
        let total = self.arrows.get(&key).cloned().unwrap_or_default() + w;
        if total.is_zero() {
            self.arrows.remove(&key);
        } else {
            self.arrows.insert(key, total);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    /// Arrows sorted by `(source, target)`.
    pub fn arrows(&self) -> impl Iterator<Item = (&Label, &Label, &Scalar)> {
        self.arrows.iter().map(|((s, t), w)| (s, t, w))
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn loop_count(&self) -> usize {
        self.arrows.keys().filter(|(s, t)| s == t).count()
    }

    pub fn weight(&self, s: &Label, t: &Label) -> Scalar {
        self.arrows.get(&(s.clone(), t.clone())).cloned().unwrap_or_default()
    }

    pub fn has_arrow(&self, s: &Label, t: &Label) -> bool {
        self.arrows.contains_key(&(s.clone(), t.clone()))
    }

    /// Every arrow has a reverse arrow.
    pub fn is_bidirected(&self) -> bool {
        self.arrows.keys().all(|(s, t)| self.has_arrow(t, s))
    }

    /// The vertex set as a basis space.
    pub fn space(&self) -> Result<BasisSpace, GraphError> {
        BasisSpace::new(self.vertices.clone()).map_err(|_| GraphError::NoVertices)
    }
}

/// An undirected graph with at most one edge between two vertices. Loops are
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertices: Vec<Label>,
    edges: BTreeSet<(Label, Label)>,
}

impl UndirectedGraph {
    pub fn new(vertices: Vec<Label>) -> Result<Self, GraphError> {
        WeightedDigraph::new(vertices.clone())?;
        Ok(UndirectedGraph { vertices, edges: BTreeSet::new() })
    }

    pub fn add_edge(&mut self, u: &Label, v: &Label) -> Result<(), GraphError> {
        for x in [u, v] {
            if !self.vertices.contains(x) {
                return Err(GraphError::UnknownVertex(x.clone()));
            }
        }
        let key = if u <= v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
        if !self.edges.insert(key) {
            return Err(GraphError::DuplicateEdge(u.clone(), v.clone()));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    /// Edges as ordered pairs `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = &(Label, Label)> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loop(&self, v: &Label) -> bool {
        self.edges.contains(&(v.clone(), v.clone()))
    }
}

/// The Markov L-coalgebra of a weighted digraph:
/// `Delta(v) = Σ w(v→t) v⊗t` and `Delta_tilde(v) = Σ w(s→v) s⊗v`.
pub fn markov_coalgebra(g: &WeightedDigraph) -> Result<LStructure, GraphError> {
    let space = g.space()?;
    let mut right: BTreeMap<Label, TensorVec> = BTreeMap::new();
    let mut left: BTreeMap<Label, TensorVec> = BTreeMap::new();
    for (s, t, w) in g.arrows() {
        right.entry(s.clone()).or_default().add_term(vec![s.clone(), t.clone()], w);
        left.entry(t.clone()).or_default().add_term(vec![s.clone(), t.clone()], w);
    }
    let d = MultiLinearMap::coproduct(&space, right).expect("arrows use declared vertices");
    let dt = MultiLinearMap::coproduct(&space, left).expect("arrows use declared vertices");
    Ok(LStructure::new(space).with_coproduct("Delta", d).and_then(|s| s.with_coproduct("Delta_tilde", dt)).expect("same space"))
}

/// The geometric support of the named coproducts: every term `λ x⊗y` adds
/// weight `λ` to the arrow `x → y`, summed over images and coproducts.
pub fn geometric_support(s: &LStructure, names: &[&str]) -> Result<WeightedDigraph, StructureError> {
    let maps = names.iter().map(|n| s.get(n)).collect::<Result<Vec<_>, _>>()?;
    Ok(support_of(s.space(), maps))
}

/// [`geometric_support`] for maps that are not part of a structure.
pub fn support_of<'a, I>(space: &BasisSpace, maps: I) -> WeightedDigraph
where
    I: IntoIterator<Item = &'a MultiLinearMap>,
{
    let mut g = WeightedDigraph::new(space.labels().to_vec()).expect("basis labels are distinct");
    for m in maps {
        for (_, image) in m.rows() {
            for (t, c) in image.iter() {
                g.add_arrow(&t[0], &t[1], c).expect("terms use basis labels");
            }
        }
    }
    g
}

/// The `(n,1)`-De Bruijn graph on vertices `x1, …, xn`: every ordered pair,
/// loops included, with unit weight.
pub fn de_bruijn_graph(n: usize) -> Result<WeightedDigraph, GraphError> {
    let names: Vec<Label> = (1..=n).map(|i| Label::from(format!("x{i}"))).collect();
    de_bruijn_on(&names)
}

/// The complete digraph with loops on the given vertices.
pub fn de_bruijn_on(vertices: &[Label]) -> Result<WeightedDigraph, GraphError> {
    if vertices.is_empty() {
        return Err(GraphError::NoVertices);
    }
    let mut g = WeightedDigraph::new(vertices.to_vec())?;
    for s in vertices {
        for t in vertices {
            g.add_arrow(s, t, &Scalar::one())?;
        }
    }
    Ok(g)
}

/// Identity of graphs up to vertex order: same vertex set, same weighted
/// arrows.
pub fn same_graph(a: &WeightedDigraph, b: &WeightedDigraph) -> bool {
    let va: BTreeSet<_> = a.vertices.iter().collect();
    let vb: BTreeSet<_> = b.vertices.iter().collect();
    va == vb && a.arrows == b.arrows
}
