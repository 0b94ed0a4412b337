//! Values computed once with the oracles in `common` (see the
//! `frozen_values` test target, which recomputes them) and frozen here.

/// Per fixture group: order, |Z(G)|, ω and χ of the commuting graph of any
/// Rees instance with a non-trivial index set, its girth, the diameter of
/// each component, and the largest abelian subgroup order.
pub struct GroupFacts {
    pub spec: &'static str,
    pub order: usize,
    pub center: usize,
    pub omega: usize,
    pub chi: usize,
    pub girth: Option<usize>,
    pub component_diameter: u64,
    pub max_abelian: usize,
}

const fn facts(
    spec: &'static str,
    order: usize,
    center: usize,
    omega: usize,
    girth: Option<usize>,
    component_diameter: u64,
) -> GroupFacts {
    GroupFacts {
        spec,
        order,
        center,
        omega,
        chi: omega,
        girth,
        component_diameter,
        max_abelian: omega,
    }
}

pub const FIXTURE_GROUPS: [GroupFacts; 10] = [
    facts("C1", 1, 1, 1, None, 0),
    facts("C2", 2, 2, 2, None, 1),
    facts("C3", 3, 3, 3, Some(3), 1),
    facts("C4", 4, 4, 4, Some(3), 1),
    facts("C5", 5, 5, 5, Some(3), 1),
    facts("C6", 6, 6, 6, Some(3), 1),
    facts("C2 x C2", 4, 4, 4, Some(3), 1),
    facts("S3", 6, 1, 3, Some(3), 2),
    facts("D4", 8, 2, 4, Some(3), 2),
    facts("Q8", 8, 2, 4, Some(3), 2),
];

pub const INDEX_PAIRS: [(usize, usize); 4] = [(1, 2), (2, 1), (2, 2), (3, 2)];
pub const SEEDS: [u64; 2] = [0, 1];

/// Maximum commutative subsemigroups of `M(G; I, Λ; random P, seed 0)`:
/// (group, |I|, |Λ|, maximum size, number of maximum-size subsemigroups).
pub const MAX_COMMUTATIVE: [(&str, usize, usize, usize, usize); 3] =
    [("S3", 2, 1, 3, 2), ("D4", 2, 1, 4, 6), ("C4", 2, 2, 4, 4)];

/// Commuting graphs of non-abelian fixture groups: (group, vertices, edges,
/// components, girth).
pub const GROUP_GRAPHS: [(&str, usize, usize, usize, Option<usize>); 4] = [
    ("S3", 5, 1, 4, None),
    ("D4", 6, 3, 3, None),
    ("Q8", 6, 3, 3, None),
    ("A4", 11, 7, 5, Some(3)),
];
