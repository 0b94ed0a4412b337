//! Brute-force oracles. Deliberately naive: subsets, set partitions,
//! permutations and plain enumeration, sharing no code with the solvers.
#![allow(dead_code)]

use rees_commute::algebra::MulSystem;
use rees_commute::graph::SimpleGraph;

/// Adjacency matrix copy, so the oracles only touch `has_edge`.
pub fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|u| (0..n).map(|w| g.has_edge(u, w)).collect()).collect()
}

pub fn oracle_clique_number(g: &SimpleGraph) -> usize {
    let a = adjacency(g);
    let n = a.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = members
            .iter()
            .all(|&u| members.iter().all(|&w| u == w || a[u][w]));
        if is_clique {
            best = best.max(members.len());
        }
    }
    best
}

/// Minimum number of blocks over all set partitions into independent sets,
/// enumerated as restricted growth strings.
pub fn oracle_chromatic_number(g: &SimpleGraph) -> usize {
    let a = adjacency(g);
    let n = a.len();
    if n == 0 {
        return 0;
    }
    let mut best = n;
    let mut rgs = vec![0usize; n];
    fn rec(v: usize, blocks: usize, rgs: &mut Vec<usize>, a: &[Vec<bool>], best: &mut usize) {
        let n = a.len();
        if v == n {
            let proper = (0..n).all(|u| (0..n).all(|w| !a[u][w] || rgs[u] != rgs[w]));
            if proper {
                *best = (*best).min(blocks);
            }
            return;
        }
        for b in 0..=blocks {
            rgs[v] = b;
            rec(v + 1, blocks.max(b + 1), rgs, a, best);
        }
    }
    rec(1, 1, &mut rgs, &a, &mut best);
    best
}

/// Shortest simple cycle found by extending every simple path from its
/// smallest vertex.
pub fn oracle_girth(g: &SimpleGraph) -> Option<usize> {
    let a = adjacency(g);
    let n = a.len();
    let mut best: Option<usize> = None;
    fn walk(path: &mut Vec<usize>, a: &[Vec<bool>], best: &mut Option<usize>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for w in 0..a.len() {
            if !a[last][w] {
                continue;
            }
            if w == start && path.len() >= 3 {
                let len = path.len();
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if w > start && !path.contains(&w) {
                path.push(w);
                walk(path, a, best);
                path.pop();
            }
        }
    }
    for s in 0..n {
        walk(&mut vec![s], &a, &mut best);
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Tries every bijection.
pub fn oracle_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    let (a, b) = (adjacency(g), adjacency(h));
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| (0..n).all(|w| a[u][w] == b[perm[u]][perm[w]])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// All vertex relabelings `perm` of `g`, for building isomorphic copies.
pub fn relabel(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, w)| (perm[u], perm[w])).collect();
    SimpleGraph::from_edges(g.vertex_count(), &edges).unwrap()
}

pub fn oracle_center(s: &MulSystem) -> Vec<usize> {
    let n = s.order();
    (0..n)
        .filter(|&z| (0..n).all(|x| s.mul(z, x) == s.mul(x, z)))
        .collect()
}

/// Shortest left path by plain enumeration of all simple paths in the
/// commuting graph (as element sequences), lexicographically least among
/// the shortest.
pub fn oracle_left_path(s: &MulSystem) -> Option<Vec<usize>> {
    let n = s.order();
    let center = oracle_center(s);
    let verts: Vec<usize> = (0..n).filter(|x| !center.contains(x)).collect();
    let adj = |x: usize, y: usize| x != y && s.mul(x, y) == s.mul(y, x);
    let mut found: Vec<Vec<usize>> = Vec::new();
    fn extend(path: &mut Vec<usize>, verts: &[usize], adj: &dyn Fn(usize, usize) -> bool, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for &w in verts {
            if !path.contains(&w) && adj(last, w) {
                path.push(w);
                extend(path, verts, adj, out);
                path.pop();
            }
        }
    }
    for &v in &verts {
        extend(&mut vec![v], &verts, &adj, &mut found);
    }
    found
        .into_iter()
        .filter(|p| {
            let (x1, xn) = (p[0], p[p.len() - 1]);
            p.len() >= 2 && x1 != xn && p.iter().all(|&x| s.mul(x1, x) == s.mul(xn, x))
        })
        .min_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)))
}

/// Subsets (as sorted vectors) of a system of order ≤ 20 that are closed
/// under the product and internally commutative, of maximum size.
pub fn oracle_max_commutative_subsemigroups(s: &MulSystem) -> (usize, Vec<Vec<usize>>) {
    let n = s.order();
    assert!(n <= 20);
    let mut best = 0;
    let mut sets = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let ok = members.iter().all(|&x| {
            members
                .iter()
                .all(|&y| s.mul(x, y) == s.mul(y, x) && mask >> s.mul(x, y) & 1 == 1)
        });
        if ok {
            if size > best {
                best = size;
                sets.clear();
            }
            sets.push(members);
        }
    }
    sets.sort();
    (best, sets)
}

/// Abelian subgroups of a group given by its table, by subset scan.
pub fn oracle_abelian_subgroups(s: &MulSystem, identity: usize) -> Vec<Vec<usize>> {
    let n = s.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask >> identity & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let ok = members.iter().all(|&x| {
            members
                .iter()
                .all(|&y| s.mul(x, y) == s.mul(y, x) && mask >> s.mul(x, y) & 1 == 1)
        });
        if ok {
            out.push(members);
        }
    }
    out
}

/// Order-3 left-constant system `xy = f(x)` with `f = (a, a, c)`.
pub fn t3() -> MulSystem {
    let f = [0, 0, 2];
    let table = (0..3).map(|x| vec![f[x]; 3]).collect();
    MulSystem::from_table(3, table, vec!["a".into(), "b".into(), "c".into()]).unwrap()
}

/// `xy = f(x)` for an idempotent map `f`; associative since `f∘f = f`.
pub fn left_constant(f: &[usize]) -> MulSystem {
    let n = f.len();
    let table = (0..n).map(|x| vec![f[x]; n]).collect();
    MulSystem::from_table_unlabeled(n, table).unwrap()
}

/// `xy = g(y)` for an idempotent map `g`; associative since `g∘g = g`.
pub fn right_constant(g: &[usize]) -> MulSystem {
    let n = g.len();
    let table = (0..n).map(|_| g.to_vec()).collect();
    MulSystem::from_table_unlabeled(n, table).unwrap()
}

/// Direct product, pairs encoded `a·|T| + b`.
pub fn product_system(s: &MulSystem, t: &MulSystem) -> MulSystem {
    let (n, m) = (s.order(), t.order());
    let table = (0..n * m)
        .map(|x| (0..n * m).map(|y| s.mul(x / m, y / m) * m + t.mul(x % m, y % m)).collect())
        .collect();
    MulSystem::from_table_unlabeled(n * m, table).unwrap()
}

pub mod expected;

/// Commuting graph built directly from the table: non-central elements in
/// ascending order, edges between distinct commuting elements.
pub fn naive_commuting_graph(s: &MulSystem) -> (Vec<usize>, SimpleGraph) {
    let center = oracle_center(s);
    let verts: Vec<usize> = (0..s.order()).filter(|x| !center.contains(x)).collect();
    let mut edges = Vec::new();
    for (a, &x) in verts.iter().enumerate() {
        for (b, &y) in verts.iter().enumerate().skip(a + 1) {
            if s.mul(x, y) == s.mul(y, x) {
                edges.push((a, b));
            }
        }
    }
    let g = SimpleGraph::from_edges(verts.len(), &edges).unwrap();
    (verts, g)
}

/// Vertex sets of components by repeated closure.
pub fn oracle_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for (u, w) in g.edges() {
            let m = label[u].min(label[w]);
            if label[u] != m || label[w] != m {
                label[u] = m;
                label[w] = m;
                changed = true;
            }
        }
    }
    let mut roots: Vec<usize> = label.clone();
    roots.sort_unstable();
    roots.dedup();
    roots
        .into_iter()
        .map(|r| (0..n).filter(|&v| label[v] == r).collect())
        .collect()
}

/// Subgraph on `vs`, renumbered in the given order.
pub fn naive_induced(g: &SimpleGraph, vs: &[usize]) -> SimpleGraph {
    let mut edges = Vec::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            if g.has_edge(vs[a], vs[b]) {
                edges.push((a, b));
            }
        }
    }
    SimpleGraph::from_edges(vs.len(), &edges).unwrap()
}

/// Largest finite distance by Floyd–Warshall; `None` if disconnected.
pub fn oracle_diameter(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for (w, cell) in row.iter_mut().enumerate() {
            if g.has_edge(u, w) {
                *cell = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    (m < inf).then_some(m)
}
