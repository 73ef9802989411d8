//! Edge-list ingestion and DOT output.

use std::fmt::Write;

use super::{GraphError, UndirectedGraph, WeightedDigraph};
use crate::exactlinalg::{Label, Scalar};

/// A malformed edge-list line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError { line, message: message.into() }
}

/// Non-empty lines with comments (`#`) stripped, numbered from one.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn push_vertex(vs: &mut Vec<Label>, name: &str) -> Label {
    let l = Label::new(name);
    if !vs.contains(&l) {
        vs.push(l.clone());
    }
    l
}

/// Parses `u v [weight]` lines; a line with one label declares an isolated
/// vertex. Vertices are ordered by first appearance.
pub fn parse_digraph(text: &str) -> Result<WeightedDigraph, EdgeListError> {
    let mut vs = Vec::new();
    let mut arrows = Vec::new();
    for (n, line) in lines(text) {
        let (s, rest) = match line.split_once(char::is_whitespace) {
            Some((s, rest)) => (s, rest.trim()),
            None => (line, ""),
        };
        let s = push_vertex(&mut vs, s);
        if rest.is_empty() {
            continue;
        }
        let (t, w) = match rest.split_once(char::is_whitespace) {
            Some((t, w)) => (t, w.trim()),
            None => (rest, ""),
        };
        if t == "--" {
            return Err(err(n, "undirected edge in a directed edge list"));
        }
        let t = push_vertex(&mut vs, t);
        let w = if w.is_empty() { Scalar::one() } else { w.parse::<Scalar>().map_err(|e| err(n, format!("bad weight `{w}`: {e}")))? };
        arrows.push((s, t, w));
    }
    let mut g = WeightedDigraph::new(vs).expect("vertices are deduplicated");
    for (s, t, w) in arrows {
        g.add_arrow(&s, &t, &w).expect("declared above");
    }
    Ok(g)
}

/// Parses `u -- v` lines; a line with one label declares an isolated vertex.
pub fn parse_undirected(text: &str) -> Result<UndirectedGraph, EdgeListError> {
    let mut vs = Vec::new();
    let mut edges = Vec::new();
    for (n, line) in lines(text) {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            [v] => {
                push_vertex(&mut vs, v);
            }
            [u, "--", v] => {
                let u = push_vertex(&mut vs, u);
                let v = push_vertex(&mut vs, v);
                edges.push((n, u, v));
            }
            _ => return Err(err(n, format!("expected `u -- v`, found `{line}`"))),
        }
    }
    let mut g = UndirectedGraph::new(vs).expect("vertices are deduplicated");
    for (n, u, v) in edges {
        g.add_edge(&u, &v).map_err(|e: GraphError| err(n, e.to_string()))?;
    }
    Ok(g)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text: vertices in declaration order, arrows by `(source, target)`,
/// weights other than 1 as labels.
pub fn dot_export(g: &WeightedDigraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {};", quote(v.as_str())).unwrap();
    }
    for (s, t, w) in g.arrows() {
        if w.is_one() {
            writeln!(out, "  {} -> {};", quote(s.as_str()), quote(t.as_str())).unwrap();
        } else {
            writeln!(out, "  {} -> {} [label={}];", quote(s.as_str()), quote(t.as_str()), quote(&w.to_string())).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_lines() {
        let g = parse_digraph("# F\na a\na b 1/2\nb c q\n\nz\n").unwrap();
        assert_eq!(g.vertices().len(), 4);
        assert_eq!(g.weight(&"b".into(), &"c".into()), Scalar::q());
        assert_eq!(g.weight(&"a".into(), &"b".into()), Scalar::ratio(1, 2));
    }

    #[test]
    fn bad_weight_names_line() {
        let e = parse_digraph("a b\na b q^\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn undirected_lines() {
        let g = parse_undirected("u -- v\nv -- w\nx\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.vertices().len(), 4);
        assert_eq!(parse_undirected("u -- v\nv -- u\n").unwrap_err().line, 2);
        assert!(parse_undirected("u v\n").is_err());
    }

    #[test]
    fn dot_output() {
        let empty = WeightedDigraph::new(vec![]).unwrap();
        assert_eq!(dot_export(&empty), "digraph G {\n}\n");
        let mut g = WeightedDigraph::of(&["u", "v"], &[]).unwrap();
        g.add_arrow(&"u".into(), &"v".into(), &Scalar::q()).unwrap();
        assert_eq!(dot_export(&g), "digraph G {\n  \"u\";\n  \"v\";\n  \"u\" -> \"v\" [label=\"q\"];\n}\n");
    }
}
