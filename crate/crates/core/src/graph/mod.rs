//! Simple undirected graphs and exact invariants.

mod clique;
mod coloring;
mod invariants;
mod iso;

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{out_of_range, Error, Result};

pub use clique::{clique_number, maximal_cliques, Clique};
pub use coloring::{chromatic_number, Coloring};
pub use invariants::{connected_components, diameter, distances_from, girth, ExtendedNat};
pub use iso::{are_isomorphic, IsoWitness};

/// Undirected graph without loops or multiple edges on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adjacency: vec![FixedBitSet::with_capacity(n); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n {
            return Err(out_of_range("edge endpoint", u, n));
        }
        if v >= n {
            return Err(out_of_range("edge endpoint", v, n));
        }
        if u == v {
            return Err(Error::Parse(format!("self-loop at vertex {u}")));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].ones()
    }

    pub(crate) fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Edges `(u, w)` with `u < w`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.neighbors(u).filter(move |&w| w > u).map(move |w| (u, w)))
            .collect()
    }

    /// Parses the edge-list text format: vertex count, then one `u w` per line.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad vertex count: {e}")))?;
        let mut g = Self::empty(n);
        for line in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|e| Error::Parse(format!("{line:?}: {e}"))))
                .collect::<Result<_>>()?;
            match nums[..] {
                [u, w] => g.add_edge(u, w)?,
                _ => return Err(Error::Parse(format!("expected two endpoints in {line:?}"))),
            }
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for (u, w) in self.edges() {
            writeln!(out, "{u} {w}").unwrap();
        }
        out
    }

    /// Undirected DOT with nodes in index order and edges sorted.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {} {{\n", dot_id(name));
        for v in 0..self.vertex_count() {
            writeln!(out, "  {v} [label={}];", dot_id(&self.label(v))).unwrap();
        }
        for (u, w) in self.edges() {
            writeln!(out, "  {u} -- {w};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `K_n`.
pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for (v, row) in g.adjacency.iter_mut().enumerate() {
        row.insert_range(..);
        row.set(v, false);
    }
    g
}

/// Disjoint union of `g` and `h` with every cross pair joined. Vertices of
/// `h` are shifted by `g.vertex_count()`.
pub fn graph_join(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    combine(g, h, true)
}

/// Disjoint union; vertices of `h` are shifted by `g.vertex_count()`.
pub fn disjoint_union(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    combine(g, h, false)
}

fn combine(g: &SimpleGraph, h: &SimpleGraph, cross: bool) -> SimpleGraph {
    let (a, b) = (g.vertex_count(), h.vertex_count());
    let mut out = SimpleGraph::empty(a + b);
    for (u, w) in g.edges() {
        out.add_edge(u, w).unwrap();
    }
    for (u, w) in h.edges() {
        out.add_edge(a + u, a + w).unwrap();
    }
    if cross {
        for u in 0..a {
            for w in 0..b {
                out.add_edge(u, a + w).unwrap();
            }
        }
    }
    out
}

/// An induced subgraph with its map back to the parent's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: SimpleGraph,
    /// `back_map[v]` is the parent vertex of subgraph vertex `v`.
    pub back_map: Vec<usize>,
}

/// Subgraph induced by `subset`, renumbered in ascending parent order.
pub fn induced_subgraph(g: &SimpleGraph, subset: &[usize]) -> Result<InducedSubgraph> {
    let n = g.vertex_count();
    let mut back_map = subset.to_vec();
    back_map.sort_unstable();
    back_map.dedup();
    if let Some(&bad) = back_map.iter().find(|&&v| v >= n) {
        return Err(out_of_range("induced subset", bad, n));
    }
    let mut sub = SimpleGraph::empty(back_map.len());
    for (a, &u) in back_map.iter().enumerate() {
        for (b, &w) in back_map.iter().enumerate().skip(a + 1) {
            if g.has_edge(u, w) {
                sub.add_edge(a, b)?;
            }
        }
    }
    if let Some(labels) = &g.labels {
        sub.labels = Some(back_map.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok(InducedSubgraph {
        graph: sub,
        back_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edges() {
        assert_eq!(complete_graph(1).edge_count(), 0);
        assert_eq!(complete_graph(3).edge_count(), 3);
        assert_eq!(complete_graph(4).edge_count(), 6);
        assert_eq!(complete_graph(0).vertex_count(), 0);
    }

    #[test]
    fn joins() {
        assert_eq!(graph_join(&complete_graph(1), &complete_graph(1)), complete_graph(2));
        assert_eq!(graph_join(&complete_graph(2), &complete_graph(3)), complete_graph(5));
        let j = graph_join(&complete_graph(2), &SimpleGraph::empty(2));
        assert_eq!(j.vertex_count(), 4);
        assert_eq!(j.edge_count(), 5);
    }

    #[test]
    fn induced() {
        let k4 = complete_graph(4);
        let sub = induced_subgraph(&k4, &[3, 0, 2]).unwrap();
        assert_eq!(sub.graph, complete_graph(3));
        assert_eq!(sub.back_map, vec![0, 2, 3]);
        assert_eq!(induced_subgraph(&k4, &[]).unwrap().graph.vertex_count(), 0);
        assert!(induced_subgraph(&k4, &[4]).is_err());
    }

    #[test]
    fn text_format() {
        let g = SimpleGraph::from_edges(4, &[(2, 3), (0, 1)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "4\n0 1\n2 3\n");
        assert_eq!(SimpleGraph::from_text(&text).unwrap(), g);
        assert!(SimpleGraph::from_text("2\n0 0\n").is_err());
        assert!(SimpleGraph::from_text("2\n0 5\n").is_err());
        assert!(SimpleGraph::from_text("2\n0\n").is_err());
    }

    #[test]
    fn dot_output() {
        let g = complete_graph(2)
            .with_labels(vec!["a".into(), "b\"".into()])
            .unwrap();
        assert_eq!(
            g.to_dot("k2"),
            "graph \"k2\" {\n  0 [label=\"a\"];\n  1 [label=\"b\\\"\"];\n  0 -- 1;\n}\n"
        );
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(complete_graph(2).with_labels(vec!["a".into(), "a".into()]).is_err());
    }
}
