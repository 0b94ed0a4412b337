//! Catalog of named groups: cyclic, dihedral, dicyclic, symmetric, A4, Q8 and direct
//! products of those. The identity is always element 0.

use std::collections::HashMap;
use std::hash::Hash;

use super::group::FiniteGroup;
use super::table::MulSystem;
use crate::error::{Error, Result};

/// Default cap on the order of a named group.
pub const DEFAULT_NAMED_CAP: usize = 64;

/// Parses a group spec such as `"S3"`, `"D4"`, `"Q8"` or `"C2 x C2"`.
pub fn named_group(spec: &str) -> Result<FiniteGroup> {
    named_group_with_cap(spec, DEFAULT_NAMED_CAP)
}

pub fn named_group_with_cap(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let factors: Vec<&str> = spec.split(['x', '×']).map(str::trim).collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::UnknownSpec(spec.to_string()));
    }
    if factors.len() == 1 {
        return basic_group(factors[0], cap, spec);
    }
    let mut product_order = 1usize;
    let mut groups = Vec::with_capacity(factors.len());
    for f in &factors {
        let g = basic_group(f, cap, spec)?;
        product_order = product_order.saturating_mul(g.order());
        if product_order > cap {
            return Err(Error::SizeLimitExceeded {
                what: format!("direct product {spec:?}"),
                size: product_order,
                cap,
            });
        }
        groups.push(g);
    }
    Ok(direct_product(&groups))
}

fn basic_group(name: &str, cap: usize, spec: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownSpec(spec.to_string());
    match name {
        "A4" => return Ok(alternating4()),
        "Q8" => return Ok(quaternion()),
        _ => {}
    }
    let prefix = if name.starts_with("Dic") { 3 } else { name.char_indices().nth(1).map_or(name.len(), |(i, _)| i) };
    let (kind, digits) = name.split_at(prefix);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown());
    }
    let n: usize = digits.parse().map_err(|_| unknown())?;
    let check_cap = |order: usize| {
        if order > cap {
            Err(Error::SizeLimitExceeded {
                what: format!("group {name:?}"),
                size: order,
                cap,
            })
        } else {
            Ok(())
        }
    };
    match kind {
        "C" if n >= 1 => {
            check_cap(n)?;
            Ok(cyclic(n))
        }
        "D" if n >= 3 => {
            check_cap(n.saturating_mul(2))?;
            Ok(dihedral(n))
        }
        "Dic" if n >= 2 => {
            check_cap(n.saturating_mul(4))?;
            Ok(dicyclic(n))
        }
        "S" if (2..=5).contains(&n) => Ok(symmetric(n)),
        _ => Err(unknown()),
    }
}

/// Builds a group from an explicit element list (identity first) and a
/// multiplication closure over those elements.
pub(crate) fn group_from_elements<T, F>(elements: &[T], labels: Vec<String>, mul: F) -> FiniteGroup
where
    T: Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elements.len();
    let mut flat = Vec::with_capacity(n * n);
    for a in elements {
        for b in elements {
            flat.push(index[&mul(a, b)]);
        }
    }
    let system = MulSystem::from_flat(n, flat, labels).expect("catalog labels are distinct");
    if cfg!(debug_assertions) {
        system.check_associative().expect("catalog table is associative");
    }
    let g = FiniteGroup::from_system(system).expect("catalog table is a group");
    debug_assert_eq!(g.identity(), 0);
    g
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let elements: Vec<usize> = (0..n).collect();
    let labels = (0..n).map(|k| k.to_string()).collect();
    group_from_elements(&elements, labels, |a, b| (a + b) % n)
}

/// Dihedral group of order `2n`; element `r^k s^j` has index `k + n j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let elements: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..n).map(move |k| (k, j))).collect();
    let labels = elements
        .iter()
        .map(|&(k, j)| {
            let r = match k {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (_, 0) => r,
                (_, _) => format!("{r}s"),
            }
        })
        .collect();
    group_from_elements(&elements, labels, |&(k, j), &(m, l)| {
        let rot = if j == 0 { k + m } else { k + n - m };
        (rot % n, (j + l) % 2)
    })
}

/// Dicyclic group of order `4n`: `<a, x | a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1>`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    let elements: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m).map(move |k| (k, j))).collect();
    let labels = elements
        .iter()
        .map(|&(k, j)| match (k, j) {
            (0, 0) => "e".to_string(),
            (1, 0) => "a".to_string(),
            (_, 0) => format!("a^{k}"),
            (0, _) => "x".to_string(),
            (1, _) => "ax".to_string(),
            (_, _) => format!("a^{k}x"),
        })
        .collect();
    group_from_elements(&elements, labels, |&(k, j), &(l, i)| {
        // a^k x^j a^l x^i = a^(k ± l) x^(j + i), with x^2 = a^n
        let mut rot = if j == 0 { k + l } else { k + m - l };
        if j + i == 2 {
            rot += n;
        }
        (rot % m, (j + i) % 2)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            out.push_str(&(k + 1).to_string());
            k = p[k];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Permutations act on the right: `xy` applies `x` first, then `y`.
fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    x.iter().map(|&k| y[k]).collect()
}

fn permutation_group(elements: Vec<Vec<usize>>) -> FiniteGroup {
    let labels = elements.iter().map(|p| cycle_label(p)).collect();
    group_from_elements(&elements, labels, |x, y| compose(x, y))
}

/// Symmetric group on `n` points; elements listed in lexicographic order of
/// their image sequences, so the identity comes first.
pub fn symmetric(n: usize) -> FiniteGroup {
    permutation_group(permutations(n))
}

pub fn alternating4() -> FiniteGroup {
    permutation_group(permutations(4).into_iter().filter(|p| is_even(p)).collect())
}

/// Quaternion group; index `2u + s` for unit `u` in `1, i, j, k` and sign bit `s`.
pub fn quaternion() -> FiniteGroup {
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let elements: Vec<(usize, bool)> = (0..4).flat_map(|u| [(u, false), (u, true)]).collect();
    let names = ["1", "i", "j", "k"];
    let labels = elements
        .iter()
        .map(|&(u, neg)| format!("{}{}", if neg { "-" } else { "" }, names[u]))
        .collect();
    group_from_elements(&elements, labels, |&(u, su), &(v, sv)| {
        let (w, sw) = UNIT[u][v];
        (w, su ^ sv ^ sw)
    })
}

/// Direct product with mixed-radix indexing, first factor most significant.
pub fn direct_product(factors: &[FiniteGroup]) -> FiniteGroup {
    let mut elements: Vec<Vec<usize>> = vec![Vec::new()];
    for g in factors {
        elements = elements
            .into_iter()
            .flat_map(|prefix| {
                (0..g.order()).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    let labels = elements
        .iter()
        .map(|tuple| {
            let parts: Vec<&str> = tuple.iter().zip(factors).map(|(&x, g)| g.label(x)).collect();
            format!("({})", parts.join("|"))
        })
        .collect();
    group_from_elements(&elements, labels, |a, b| {
        a.iter()
            .zip(b)
            .zip(factors)
            .map(|((&x, &y), g)| g.mul(x, y))
            .collect()
    })
}
