use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A maximum clique: its size and the lexicographically least witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clique {
    pub size: usize,
    pub members: Vec<usize>,
}

impl Clique {
    pub fn is_clique_of(&self, g: &SimpleGraph) -> bool {
        self.members.len() == self.size
            && self.members.windows(2).all(|w| w[0] < w[1])
            && self.members.iter().all(|&u| u < g.vertex_count())
            && self
                .members
                .iter()
                .enumerate()
                .all(|(a, &u)| self.members[a + 1..].iter().all(|&w| g.has_edge(u, w)))
    }
}

/// Exact clique number by branch and bound over bitset neighborhoods.
///
/// Vertices are branched in ascending order, so cliques are visited in
/// lexicographic order of their sorted member lists and the first maximum
/// clique reached is the lexicographically least one.
pub fn clique_number(g: &SimpleGraph, limits: &Limits) -> Result<Clique> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limits.clique_vertices {
        return Err(Error::SizeLimitExceeded {
            what: "graph for clique number".into(),
            size: n,
            cap: limits.clique_vertices,
        });
    }
    let mut search = CliqueSearch {
        g,
        current: Vec::new(),
        best: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all);
    Ok(Clique {
        size: search.best.len(),
        members: search.best,
    })
}

struct CliqueSearch<'a> {
    g: &'a SimpleGraph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut candidates: FixedBitSet) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if self.current.len() + color_bound(self.g, &candidates) <= self.best.len() {
            return;
        }
        while let Some(v) = candidates.minimum() {
            if self.current.len() + candidates.count_ones(..) <= self.best.len() {
                return;
            }
            candidates.set(v, false);
            let mut next = candidates.clone();
            next.intersect_with(self.g.neighbor_set(v));
            self.current.push(v);
            self.expand(next);
            self.current.pop();
        }
    }
}

/// Number of classes in a greedy coloring of the candidate set; an upper
/// bound on any clique inside it.
fn color_bound(g: &SimpleGraph, candidates: &FixedBitSet) -> usize {
    let mut uncolored = candidates.clone();
    let mut colors = 0;
    while !uncolored.is_clear() {
        colors += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.minimum() {
            available.set(v, false);
            available.difference_with(g.neighbor_set(v));
            uncolored.set(v, false);
        }
    }
    colors
}

/// All inclusion-maximal cliques, each sorted, in lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &SimpleGraph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, p, x, &mut out, limits.clique_output)?;
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &SimpleGraph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    budget: usize,
) -> Result<()> {
    if p.is_clear() {
        if x.is_clear() && !(r.is_empty() && g.vertex_count() > 0) {
            if out.len() >= budget {
                return Err(Error::OutputBudgetExceeded { budget });
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    let pivot = p
        .union(&x)
        .max_by_key(|&u| (p.intersection(g.neighbor_set(u)).count(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let mut branch = p.clone();
    branch.difference_with(g.neighbor_set(pivot));
    for v in branch.ones() {
        let nv = g.neighbor_set(v);
        let mut p2 = p.clone();
        p2.intersect_with(nv);
        let mut x2 = x.clone();
        x2.intersect_with(nv);
        r.push(v);
        bron_kerbosch(g, r, p2, x2, out, budget)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}
