use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::SimpleGraph;
use crate::error::{Error, Result};

/// A non-negative integer or infinity; infinity is greater than every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => f.write_str("infinity"),
        }
    }
}

// Serialized as a number, or the string "infinity".
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => s.serialize_u64(*v),
            ExtendedNat::Infinity => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(ExtendedNat::Finite(v)),
            Raw::Str(s) if s == "infinity" => Ok(ExtendedNat::Infinity),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad extended natural {s:?}"))),
        }
    }
}

/// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn distances_from(g: &SimpleGraph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Largest pairwise distance; infinite iff the graph is disconnected.
pub fn diameter(g: &SimpleGraph) -> Result<ExtendedNat> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = 0;
    for v in 0..g.vertex_count() {
        for d in distances_from(g, v) {
            match d {
                Some(d) => best = best.max(d),
                None => return Ok(ExtendedNat::Infinity),
            }
        }
    }
    Ok(ExtendedNat::Finite(best as u64))
}

/// Length of a shortest cycle, or `None` for a forest.
///
/// A BFS from every root; a non-tree edge `(u, w)` closes a closed walk of
/// length `d(u) + d(w) + 1`, and the minimum over all roots is exact.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
