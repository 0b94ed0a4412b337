use serde::{Deserialize, Serialize};

use super::{clique_number, connected_components, induced_subgraph, SimpleGraph};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Exact chromatic number with a proper coloring using exactly `count` colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub count: usize,
    /// `colors[v]` is the color of vertex `v`, in `0..count`.
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn is_proper_for(&self, g: &SimpleGraph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| c < self.count)
            && g.edges().iter().all(|&(u, w)| self.colors[u] != self.colors[w])
    }
}

const MAX_SEARCH_COLORS: usize = 128;

/// Exact chromatic number, solved per connected component.
///
/// Each component is colored with the lexicographically least proper
/// coloring that uses its own minimum number of colors. The search for `k`
/// colors runs from the clique number up to the greedy bound.
pub fn chromatic_number(g: &SimpleGraph, limits: &Limits) -> Result<Coloring> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limits.chromatic_vertices {
        return Err(Error::SizeLimitExceeded {
            what: "graph for chromatic number".into(),
            size: n,
            cap: limits.chromatic_vertices,
        });
    }
    let relaxed = Limits {
        clique_vertices: usize::MAX,
        ..*limits
    };
    let mut colors = vec![0; n];
    let mut count = 0;
    for comp in connected_components(g) {
        let sub = induced_subgraph(g, &comp)?;
        let local = color_connected(&sub.graph, &relaxed)?;
        count = count.max(local.count);
        for (v, &c) in sub.back_map.iter().zip(&local.colors) {
            colors[*v] = c;
        }
    }
    Ok(Coloring { count, colors })
}

fn color_connected(g: &SimpleGraph, limits: &Limits) -> Result<Coloring> {
    let greedy = greedy_coloring(g);
    let lower = clique_number(g, limits)?.size;
    if greedy.count == lower {
        // natural-order greedy is the lexicographically least proper coloring
        return Ok(greedy);
    }
    for k in lower..greedy.count {
        if k > MAX_SEARCH_COLORS {
            return Err(Error::SizeLimitExceeded {
                what: "colors in exact search".into(),
                size: k,
                cap: MAX_SEARCH_COLORS,
            });
        }
        if let Some(colors) = k_coloring(g, k) {
            return Ok(Coloring { count: k, colors });
        }
    }
    Ok(greedy)
}

fn greedy_coloring(g: &SimpleGraph) -> Coloring {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        let mut used = vec![false; n + 1];
        for w in g.neighbors(v).filter(|&w| w < v) {
            used[colors[w]] = true;
        }
        let c = used.iter().position(|u| !u).unwrap();
        colors[v] = c;
        count = count.max(c + 1);
    }
    Coloring { count, colors }
}

/// Lexicographically least proper coloring with at most `k` colors.
fn k_coloring(g: &SimpleGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let full: u128 = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
    let mut domains = vec![full; n];
    let mut colors = vec![usize::MAX; n];
    if assign(g, 0, 0, &mut domains, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

fn assign(g: &SimpleGraph, v: usize, used: usize, domains: &mut [u128], colors: &mut [usize]) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    // colors beyond `used` are interchangeable, so only the first new one is tried
    let allowed = if used >= 128 { u128::MAX } else { (1u128 << (used + 1)) - 1 };
    let mut options = domains[v] & allowed;
    while options != 0 {
        let c = options.trailing_zeros() as usize;
        options &= options - 1;
        let bit = 1u128 << c;
        let mut touched = Vec::new();
        let mut dead = false;
        for w in g.neighbors(v).filter(|&w| w > v) {
            if domains[w] & bit != 0 {
                domains[w] &= !bit;
                touched.push(w);
                if domains[w] == 0 {
                    dead = true;
                }
            }
        }
        colors[v] = c;
        if !dead && assign(g, v + 1, used.max(c + 1), domains, colors) {
            return true;
        }
        for w in touched {
            domains[w] |= bit;
        }
    }
    colors[v] = usize::MAX;
    false
}
