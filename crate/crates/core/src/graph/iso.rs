use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{connected_components, induced_subgraph, SimpleGraph};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Bijection `mapping[v]` from the vertices of one graph to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    /// True when the mapping is a bijection preserving adjacency and
    /// non-adjacency from `g` to `h`.
    pub fn verify(&self, g: &SimpleGraph, h: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        if h.vertex_count() != n || self.mapping.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in &self.mapping {
            if m >= n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        (0..n).all(|u| (u + 1..n).all(|w| g.has_edge(u, w) == h.has_edge(self.mapping[u], self.mapping[w])))
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.mapping.len()];
        for (v, &m) in self.mapping.iter().enumerate() {
            inv[m] = v;
        }
        IsoWitness { mapping: inv }
    }
}

/// Exact isomorphism test returning a witness bijection when one exists.
///
/// Disconnected graphs are matched component by component. Connected
/// components are searched by backtracking, with candidates restricted to
/// vertices of equal color under iterated neighborhood-degree refinement.
pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph, limits: &Limits) -> Result<Option<IsoWitness>> {
    for graph in [g, h] {
        if graph.vertex_count() > limits.iso_vertices {
            return Err(Error::SizeLimitExceeded {
                what: "graph for isomorphism".into(),
                size: graph.vertex_count(),
                cap: limits.iso_vertices,
            });
        }
    }
    Ok(isomorphism(g, h))
}

pub(crate) fn isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<IsoWitness> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    if (0..n).all(|v| g.neighbor_set(v) == h.neighbor_set(v)) {
        return Some(IsoWitness {
            mapping: (0..n).collect(),
        });
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }

    let comps_g = connected_components(g);
    let comps_h = connected_components(h);
    if comps_g.len() != comps_h.len() {
        return None;
    }
    if comps_g.len() == 1 {
        return connected_isomorphism(g, h);
    }
    let subs_h: Vec<_> = comps_h
        .iter()
        .map(|c| induced_subgraph(h, c).expect("component vertices are valid"))
        .collect();
    let mut used = vec![false; subs_h.len()];
    let mut mapping = vec![0; n];
    for comp in &comps_g {
        let sub_g = induced_subgraph(g, comp).expect("component vertices are valid");
        let (idx, local) = subs_h.iter().enumerate().find_map(|(k, sub_h)| {
            if used[k] {
                return None;
            }
            connected_isomorphism(&sub_g.graph, &sub_h.graph).map(|w| (k, w))
        })?;
        used[idx] = true;
        for (a, &m) in local.mapping.iter().enumerate() {
            mapping[sub_g.back_map[a]] = subs_h[idx].back_map[m];
        }
    }
    Some(IsoWitness { mapping })
}

/// Stable colors of both graphs under joint color refinement.
fn refine(g: &SimpleGraph, h: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut cg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut classes = 0;
    loop {
        let signature = |graph: &SimpleGraph, colors: &[usize], v: usize| {
            let mut nb: Vec<usize> = graph.neighbors(v).map(|w| colors[w]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sg: Vec<_> = (0..n).map(|v| signature(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| signature(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (cg, ch);
        }
        classes = ids.len();
    }
}

fn connected_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<IsoWitness> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(IsoWitness { mapping: vec![] });
    }
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }

    // BFS order from the vertex in the rarest color class
    let class_size = |c: usize| cg.iter().filter(|&&x| x == c).count();
    let root = (0..n).min_by_key(|&v| (class_size(cg[v]), v)).unwrap();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if order.len() != n {
        return None;
    }

    let mut state = Matcher {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if state.extend(0) {
        Some(IsoWitness { mapping: state.map })
    } else {
        None
    }
}

struct Matcher<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for cand in 0..self.h.vertex_count() {
            if self.used[cand] || self.ch[cand] != self.cg[v] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                self.g.has_edge(u, v) == self.h.has_edge(self.map[u], cand)
            });
            if !consistent {
                continue;
            }
            self.map[v] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}
