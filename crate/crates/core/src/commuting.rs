//! Commuting graphs, extended commuting graphs, and left paths.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::algebra::MulSystem;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub use crate::graph::{complete_graph, disjoint_union, graph_join, induced_subgraph, InducedSubgraph};

/// A commuting graph together with the element carried by each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCommGraph {
    pub graph: SimpleGraph,
    /// Ascending element indices; vertex `v` is element `vertex_to_element[v]`.
    pub vertex_to_element: Vec<usize>,
}

impl LabeledCommGraph {
    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.vertex_to_element.binary_search(&element).ok()
    }

    pub fn element_of(&self, vertex: usize) -> usize {
        self.vertex_to_element[vertex]
    }
}

fn graph_on(s: &MulSystem, elements: Vec<usize>) -> LabeledCommGraph {
    let mut graph = SimpleGraph::empty(elements.len());
    for (a, &x) in elements.iter().enumerate() {
        for (b, &y) in elements.iter().enumerate().skip(a + 1) {
            if s.commute(x, y) {
                graph.add_edge(a, b).expect("vertices in range");
            }
        }
    }
    let labels = elements.iter().map(|&x| s.label(x).to_string()).collect();
    LabeledCommGraph {
        graph: graph.with_labels(labels).expect("element labels are distinct"),
        vertex_to_element: elements,
    }
}

/// Commuting graph on the non-central elements. Undefined (an error) for
/// commutative input.
pub fn commuting_graph(s: &MulSystem) -> Result<LabeledCommGraph> {
    let center = s.center();
    if center.len() == s.order() {
        return Err(Error::CommutativeInput);
    }
    let vertices = (0..s.order()).filter(|&x| !center.contains(x)).collect();
    Ok(graph_on(s, vertices))
}

/// Commuting graph on all elements.
pub fn extended_commuting_graph(s: &MulSystem) -> LabeledCommGraph {
    graph_on(s, (0..s.order()).collect())
}

/// A left path `x_1, …, x_n` of a commuting graph, as element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftPath {
    pub vertices: Vec<usize>,
}

impl LeftPath {
    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Re-checks every defining condition by direct multiplication.
    pub fn is_valid_in(&self, s: &MulSystem) -> bool {
        let v = &self.vertices;
        if v.len() < 2 || v.iter().any(|&x| x >= s.order()) {
            return false;
        }
        let center = s.center();
        let (first, last) = (v[0], v[v.len() - 1]);
        let distinct = v.iter().enumerate().all(|(a, x)| !v[a + 1..].contains(x));
        distinct
            && first != last
            && v.iter().all(|&x| !center.contains(x))
            && v.windows(2).all(|w| s.commute(w[0], w[1]))
            && v.iter().all(|&x| s.mul(first, x) == s.mul(last, x))
    }
}

/// What is known about a system independently of search, used to qualify
/// "no left path" answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemClass {
    /// A Rees matrix semigroup over a group.
    Rees,
    /// A group.
    Group,
    General,
}

/// Shortest left path of length at most `max_length`, ties broken
/// lexicographically on the element sequence.
///
/// Paths are enumerated by increasing length, depth first in ascending
/// vertex order. A prefix is abandoned once no vertex outside it can serve
/// as the far end: the end `y` must satisfy `x_1·x_k = y·x_k` for every
/// prefix vertex `x_k`. `budget` bounds node expansions.
pub fn find_left_path(s: &MulSystem, max_length: usize, budget: u64) -> Result<Option<LeftPath>> {
    Ok(search_left_path(s, max_length, budget)?.0)
}

/// The search result, and whether the search ruled out left paths of every
/// length rather than only up to `max_length`.
fn search_left_path(s: &MulSystem, max_length: usize, budget: u64) -> Result<(Option<LeftPath>, bool)> {
    if max_length == 0 {
        return Err(Error::PreconditionViolated("max_length must be at least 1".into()));
    }
    let cg = commuting_graph(s)?;
    let g = &cg.graph;
    let n = g.vertex_count();
    let max_length = max_length.min(n.saturating_sub(1));
    let mut search = PathSearch {
        s,
        cg: &cg,
        ends: vec![FixedBitSet::with_capacity(n); n],
        path: Vec::new(),
        on_path: FixedBitSet::with_capacity(n),
        expansions: 0,
        budget,
        reached_limit: false,
    };
    for length in 1..=max_length {
        search.reached_limit = false;
        for start in 0..n {
            search.prepare(start);
            search.path.push(start);
            search.on_path.insert(start);
            let mut possible = FixedBitSet::with_capacity(n);
            possible.insert_range(..);
            let found = search.dfs(length, possible)?;
            if found {
                let path = LeftPath {
                    vertices: search.found_elements(),
                };
                return Ok((Some(path), false));
            }
            search.path.clear();
            search.on_path.clear();
        }
        // pruning does not depend on the length, so if no prefix survived
        // to this length, no longer path survives either
        if !search.reached_limit {
            return Ok((None, true));
        }
    }
    Ok((None, max_length + 1 >= n))
}

struct PathSearch<'a> {
    s: &'a MulSystem,
    cg: &'a LabeledCommGraph,
    /// `ends[k]`: vertices `y` with `x_1·x_k = y·x_k` for the current start.
    ends: Vec<FixedBitSet>,
    path: Vec<usize>,
    on_path: FixedBitSet,
    expansions: u64,
    budget: u64,
    /// Some prefix reached the current length limit.
    reached_limit: bool,
}

impl PathSearch<'_> {
    fn prepare(&mut self, start: usize) {
        let n = self.cg.graph.vertex_count();
        let first = self.cg.element_of(start);
        for k in 0..n {
            let xk = self.cg.element_of(k);
            let target = self.s.mul(first, xk);
            let set = &mut self.ends[k];
            set.clear();
            for y in 0..n {
                if self.s.mul(self.cg.element_of(y), xk) == target {
                    set.insert(y);
                }
            }
        }
    }

    fn found_elements(&self) -> Vec<usize> {
        self.path.iter().map(|&v| self.cg.element_of(v)).collect()
    }

    /// Extends the current path by `remaining` edges. `possible` holds the
    /// admissible far ends given the current prefix.
    fn dfs(&mut self, remaining: usize, mut possible: FixedBitSet) -> Result<bool> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let last = *self.path.last().unwrap();
        possible.intersect_with(&self.ends[last]);
        if remaining == 0 {
            self.reached_limit = true;
            // `last` is the far end; it was checked against every vertex,
            // itself included, via the accumulated intersection
            return Ok(self.path.len() >= 2 && possible.contains(last));
        }
        possible.difference_with(&self.on_path);
        if possible.is_clear() {
            return Ok(false);
        }
        let g = &self.cg.graph;
        let next: Vec<usize> = g.neighbors(last).filter(|&w| !self.on_path.contains(w)).collect();
        for w in next {
            self.path.push(w);
            self.on_path.insert(w);
            let found = self.dfs(remaining - 1, possible.clone())?;
            if found {
                return Ok(true);
            }
            self.on_path.set(w, false);
            self.path.pop();
        }
        Ok(false)
    }
}

/// Knit degree with the strength of a negative answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum KnitDegree {
    /// Length of a shortest left path.
    Value { value: usize, bound: usize },
    /// No left path exists at all.
    NoneProved { bound: usize },
    /// No left path of length at most `bound`; longer ones were not searched.
    NoneUpToBound { bound: usize },
}

impl KnitDegree {
    pub fn value(&self) -> Option<usize> {
        match self {
            KnitDegree::Value { value, .. } => Some(*value),
            _ => None,
        }
    }
}

/// Knit degree from a bounded left-path search.
///
/// A "none" answer is unconditional when the search ruled out every length,
/// or when `class` is a Rees matrix semigroup or a group (which never
/// have left paths); otherwise it only holds up to `max_length`.
pub fn knit_degree(s: &MulSystem, max_length: usize, class: SystemClass, budget: u64) -> Result<KnitDegree> {
    let (found, exhaustive) = search_left_path(s, max_length, budget)?;
    Ok(match found {
        Some(p) => KnitDegree::Value {
            value: p.length(),
            bound: max_length,
        },
        None => {
            if exhaustive || class != SystemClass::General {
                KnitDegree::NoneProved { bound: max_length }
            } else {
                KnitDegree::NoneUpToBound { bound: max_length }
            }
        }
    })
}
