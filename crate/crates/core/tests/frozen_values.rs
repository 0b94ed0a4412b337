//! Recomputes the frozen constants in `common::expected` with the oracles.

mod common;

use common::expected::*;
use common::*;
use rees_commute::algebra::named_group;
use rees_commute::rees::{ReesMatrixSemigroup, SandwichMatrix};

#[test]
fn fixture_group_facts() {
    for f in &FIXTURE_GROUPS {
        let g = named_group(f.spec).unwrap();
        assert_eq!(g.order(), f.order, "{}", f.spec);
        assert_eq!(oracle_center(&g).len(), f.center, "{}", f.spec);
        let max_abelian = oracle_abelian_subgroups(&g, g.identity()).iter().map(Vec::len).max().unwrap();
        assert_eq!(max_abelian, f.max_abelian, "{}", f.spec);
        for &(i, l) in &INDEX_PAIRS {
            for seed in SEEDS {
                let p = SandwichMatrix::random(&g, l, i, seed);
                let rees = ReesMatrixSemigroup::build(g.clone(), i, l, p).unwrap();
                let (verts, cg) = naive_commuting_graph(rees.as_system());
                assert_eq!(verts.len(), rees.order(), "center is empty");
                let comps = oracle_components(&cg);
                assert_eq!(comps.len(), i * l);
                let subs: Vec<_> = comps.iter().map(|c| naive_induced(&cg, c)).collect();
                let omega = subs.iter().map(oracle_clique_number).max().unwrap();
                let chi = subs.iter().map(oracle_chromatic_number).max().unwrap();
                let girth = subs.iter().filter_map(oracle_girth).min();
                let ctx = format!("{} {i}x{l} seed {seed}", f.spec);
                assert_eq!(omega, f.omega, "{ctx}");
                assert_eq!(chi, f.chi, "{ctx}");
                assert_eq!(girth, f.girth, "{ctx}");
                for s in &subs {
                    assert_eq!(oracle_diameter(s), Some(f.component_diameter as usize), "{ctx}");
                }
            }
        }
    }
}

#[test]
fn max_commutative_facts() {
    for (spec, i, l, size, count) in MAX_COMMUTATIVE {
        let g = named_group(spec).unwrap();
        let p = SandwichMatrix::random(&g, l, i, 0);
        let rees = ReesMatrixSemigroup::build(g, i, l, p).unwrap();
        let (best, sets) = oracle_max_commutative_subsemigroups(rees.as_system());
        assert_eq!((best, sets.len()), (size, count), "{spec}");
    }
}

#[test]
fn group_graph_facts() {
    for (spec, v, e, comps, girth) in GROUP_GRAPHS {
        let g = named_group(spec).unwrap();
        let (_, cg) = naive_commuting_graph(&g);
        assert_eq!(cg.vertex_count(), v, "{spec}");
        assert_eq!(cg.edges().len(), e, "{spec}");
        assert_eq!(oracle_components(&cg).len(), comps, "{spec}");
        assert_eq!(oracle_girth(&cg), girth, "{spec}");
    }
}
