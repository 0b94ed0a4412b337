use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::CheckResult;
use crate::algebra::{cyclic, ElementSet, FiniteGroup, MulSystem};
use crate::commuting::{commuting_graph, extended_commuting_graph, find_left_path, SystemClass};
use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic, chromatic_number, clique_number, connected_components, diameter, girth,
    induced_subgraph, maximal_cliques, ExtendedNat, IsoWitness,
};
use crate::limits::Limits;
use crate::rees::{ReesMatrixSemigroup, SandwichMatrix, Triple};

/// Deliberate corruptions used as negative controls for the checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fault {
    /// Changes the commutation status of elements 0 and 1 in the Cayley table.
    FlipTableEntry,
    /// Reads the sandwich matrix as `p(i, λ)` instead of `p(λ, i)`.
    TransposedSandwich,
}

/// A Rees matrix semigroup as seen by the checkers: the semigroup itself, the
/// Cayley table the checks read, and an optional injected fault.
#[derive(Debug, Clone)]
pub struct ReesInstance {
    rees: ReesMatrixSemigroup,
    table: MulSystem,
    fault: Option<Fault>,
    name: String,
}

impl ReesInstance {
    pub fn new(rees: ReesMatrixSemigroup, name: impl Into<String>) -> Self {
        let table = rees.as_system().clone();
        ReesInstance {
            rees,
            table,
            fault: None,
            name: name.into(),
        }
    }

    pub fn with_fault(rees: ReesMatrixSemigroup, name: impl Into<String>, fault: Fault) -> Self {
        let mut inst = Self::new(rees, name);
        if fault == Fault::FlipTableEntry {
            inst.table = flip_first_pair(&inst.table);
        }
        inst.fault = Some(fault);
        inst
    }

    pub fn rees(&self) -> &ReesMatrixSemigroup {
        &self.rees
    }

    pub fn table(&self) -> &MulSystem {
        &self.table
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    fn sandwich(&self, lambda: usize, i: usize) -> usize {
        let p = self.rees.sandwich();
        match self.fault {
            Some(Fault::TransposedSandwich) => p.entry(i % p.rows(), lambda % p.cols()),
            _ => p.entry(lambda, i),
        }
    }

    /// Encoded `(i, p(λ,i)^{-1}·x, λ)`.
    fn translate(&self, i: usize, lambda: usize, x: usize) -> usize {
        let g = self.rees.group();
        let y = g.mul(g.inverse(self.sandwich(lambda, i)), x);
        self.rees.encode(Triple::new(i, y, lambda))
    }

    fn labels(&self, elements: impl IntoIterator<Item = usize>) -> Vec<String> {
        elements.into_iter().map(|a| self.table.label(a).to_string()).collect()
    }

    fn require_nontrivial_index(&self) -> Result<()> {
        if self.rees.has_nontrivial_index() {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(
                "requires |I| > 1 or |Λ| > 1".into(),
            ))
        }
    }
}

fn flip_first_pair(s: &MulSystem) -> MulSystem {
    let n = s.order();
    let mut flat = s.flat_table().to_vec();
    if n >= 2 {
        let (ab, ba) = (s.mul(0, 1), s.mul(1, 0));
        flat[1] = if ab == ba { (ab + 1) % n } else { ba };
    }
    MulSystem::from_flat_unchecked(n, flat, s.labels().to_vec())
}

/// Display name `M(G;|I|,|Λ|;matrix)`.
pub fn rees_instance_name(group: &str, i_size: usize, lambda_size: usize, matrix: &str) -> String {
    format!("M({group};{i_size},{lambda_size};{matrix})")
}

pub fn check_center_empty(inst: &ReesInstance) -> Result<CheckResult> {
    inst.require_nontrivial_index()?;
    let center = inst.table.center();
    let n = inst.table.order();
    let failed = !center.is_empty() || center.len() == n;
    Ok(CheckResult::new("center_empty", &inst.name)
        .metric("order", n)
        .metric("center_size", center.len())
        .fail_if(failed, || json!({ "central_elements": inst.labels(center.iter()) })))
}

/// Compares the commutation criterion with direct product comparison on
/// every ordered pair.
pub fn check_commutation_lemma(inst: &ReesInstance) -> Result<CheckResult> {
    let s = &inst.table;
    let n = s.order();
    let mut mismatches = 0usize;
    let mut first = None;
    for a in 0..n {
        for b in 0..n {
            let lemma = inst.rees.commute_by_lemma(inst.rees.triple(a), inst.rees.triple(b));
            let table = s.commute(a, b);
            if lemma != table {
                mismatches += 1;
                first.get_or_insert((a, b, lemma, table));
            }
        }
    }
    let result = CheckResult::new("commutation_lemma", &inst.name)
        .metric("pairs", n * n)
        .metric("mismatches", mismatches);
    Ok(match first {
        Some((a, b, lemma, table)) => result.fail(json!({
            "a": s.label(a),
            "b": s.label(b),
            "ab": s.label(s.mul(a, b)),
            "ba": s.label(s.mul(b, a)),
            "lemma_commutes": lemma,
            "table_commutes": table,
        })),
        None => result,
    })
}

/// `xy = yx` in `G` iff the translated triples commute, for every
/// `(i, λ, x, y)`.
pub fn check_translation_lemma(inst: &ReesInstance) -> Result<CheckResult> {
    let g = inst.rees.group();
    let n = g.order();
    let mut cases = 0usize;
    for i in 0..inst.rees.i_size() {
        for lambda in 0..inst.rees.lambda_size() {
            let images: Vec<usize> = (0..n).map(|x| inst.translate(i, lambda, x)).collect();
            for x in 0..n {
                for y in 0..n {
                    cases += 1;
                    let in_group = g.commute(x, y);
                    let translated = inst.table.commute(images[x], images[y]);
                    if in_group != translated {
                        return Ok(CheckResult::new("translation_lemma", &inst.name)
                            .metric("cases", cases)
                            .fail(json!({
                                "i": i,
                                "lambda": lambda,
                                "x": g.label(x),
                                "y": g.label(y),
                                "translated": inst.labels([images[x], images[y]]),
                                "group_commutes": in_group,
                                "translated_commute": translated,
                            })));
                    }
                }
            }
        }
    }
    Ok(CheckResult::new("translation_lemma", &inst.name).metric("cases", cases))
}

fn expected_component_diameter(g: &FiniteGroup) -> u64 {
    if g.is_trivial() {
        0
    } else if g.is_abelian() {
        1
    } else {
        2
    }
}

/// Component count, component vertex sets, isomorphism of every component
/// with the extended commuting graph of `G`, and component diameters.
///
/// Each component is first matched by the explicit map `x ↦ (i, p(λ,i)^{-1}x, λ)`;
/// the isomorphism search is only consulted when that map is not a witness.
pub fn check_component_structure(inst: &ReesInstance, limits: &Limits) -> Result<CheckResult> {
    inst.require_nontrivial_index()?;
    let rees = &inst.rees;
    let g = rees.group();
    let cg = commuting_graph(&inst.table)?;
    let comps = connected_components(&cg.graph);
    let expected_count = rees.i_size() * rees.lambda_size();
    let expected_diam = expected_component_diameter(g);
    let result = CheckResult::new("component_structure", &inst.name)
        .metric("component_count", comps.len())
        .metric("expected_component_count", expected_count)
        .metric("expected_diameter", expected_diam);
    if comps.len() != expected_count {
        return Ok(result.fail(json!({
            "reason": "component count",
            "components": comps.iter().map(|c| inst.labels(c.iter().map(|&v| cg.element_of(v)))).collect::<Vec<_>>(),
        })));
    }

    let mut element_sets: Vec<ElementSet> = comps
        .iter()
        .map(|c| c.iter().map(|&v| cg.element_of(v)).collect())
        .collect();
    element_sets.sort_by(|a, b| a.members().cmp(b.members()));
    let mut h_classes = rees.h_classes();
    h_classes.sort_by(|a, b| a.members().cmp(b.members()));
    if element_sets != h_classes {
        let stray = element_sets.iter().find(|s| !h_classes.contains(s)).unwrap();
        return Ok(result.fail(json!({
            "reason": "component is not an H-class",
            "component": inst.labels(stray.iter()),
        })));
    }

    let ext = extended_commuting_graph(g);
    let mut certificates = Vec::with_capacity(comps.len());
    for comp in &comps {
        let sub = induced_subgraph(&cg.graph, comp)?;
        let t = rees.triple(cg.element_of(comp[0]));
        let explicit: Option<Vec<usize>> = (0..g.order())
            .map(|x| {
                let v = cg.vertex_of(inst.translate(t.i, t.lambda, x))?;
                comp.binary_search(&v).ok()
            })
            .collect();
        let witness = match explicit.map(|mapping| IsoWitness { mapping }) {
            Some(w) if w.verify(&ext.graph, &sub.graph) => Some(w),
            _ => are_isomorphic(&ext.graph, &sub.graph, limits)?,
        };
        let Some(witness) = witness else {
            return Ok(result.fail(json!({
                "reason": "component not isomorphic to the extended commuting graph of G",
                "i": t.i,
                "lambda": t.lambda,
                "component": inst.labels(comp.iter().map(|&v| cg.element_of(v))),
            })));
        };
        let diam = diameter(&sub.graph)?;
        if diam != ExtendedNat::Finite(expected_diam) {
            return Ok(result.fail(json!({
                "reason": "component diameter",
                "i": t.i,
                "lambda": t.lambda,
                "diameter": diam,
            })));
        }
        // image of each group element, in group element order
        let images = witness.mapping.iter().map(|&k| cg.element_of(comp[k]));
        certificates.push(json!({ "i": t.i, "lambda": t.lambda, "images": inst.labels(images) }));
    }
    let mut result = result.metric("diameter", expected_diam);
    result.witness = Some(json!({ "isomorphisms": certificates }));
    Ok(result)
}

/// Commuting graphs of `M(G; I, Λ; P1)` and `M(G; I, Λ; P2)` are isomorphic.
pub fn check_matrix_independence(
    group: &FiniteGroup,
    i_size: usize,
    lambda_size: usize,
    p1: &SandwichMatrix,
    p2: &SandwichMatrix,
    instance: &str,
    limits: &Limits,
) -> Result<CheckResult> {
    if i_size <= 1 && lambda_size <= 1 {
        return Err(Error::PreconditionViolated("requires |I| > 1 or |Λ| > 1".into()));
    }
    let s1 = ReesMatrixSemigroup::build_with_cap(group.clone(), i_size, lambda_size, p1.clone(), limits.rees_order)?;
    let s2 = ReesMatrixSemigroup::build_with_cap(group.clone(), i_size, lambda_size, p2.clone(), limits.rees_order)?;
    let g1 = commuting_graph(s1.as_system())?;
    let g2 = commuting_graph(s2.as_system())?;
    let result = CheckResult::new("matrix_independence", instance)
        .metric("vertices", g1.graph.vertex_count())
        .metric("edges", g1.graph.edge_count());
    Ok(match are_isomorphic(&g1.graph, &g2.graph, limits)? {
        Some(w) if w.verify(&g1.graph, &g2.graph) => {
            let mut result = result;
            result.witness = Some(json!({ "mapping": w.mapping }));
            result
        }
        _ => result.fail(json!({
            "reason": "no isomorphism between the commuting graphs",
            "p1": p1.to_rows(),
            "p2": p2.to_rows(),
        })),
    })
}

/// Maximum commutative subsemigroups, found as product-closed maximal
/// cliques of the extended commuting graph, against translated maximum
/// abelian subgroups of `G`.
///
/// A maximum-size commutative subsemigroup is always a maximal clique: any
/// element commuting with all of it would generate a larger one.
pub fn check_max_commutative(inst: &ReesInstance, limits: &Limits) -> Result<CheckResult> {
    let s = &inst.table;
    let ext = extended_commuting_graph(s);
    let cliques = maximal_cliques(&ext.graph, limits)?;
    let closed: Vec<ElementSet> = cliques
        .into_iter()
        .map(|c| c.into_iter().map(|v| ext.element_of(v)).collect::<ElementSet>())
        .filter(|set| set.iter().all(|a| set.iter().all(|b| set.contains(s.mul(a, b)))))
        .collect();
    let best = closed.iter().map(ElementSet::len).max().unwrap_or(0);
    let mut found: Vec<ElementSet> = closed.into_iter().filter(|c| c.len() == best).collect();
    found.sort_by(|a, b| a.members().cmp(b.members()));

    let g = inst.rees.group();
    let expected_size = g.max_abelian_subgroup_size(limits.group_order)?;
    let subgroups: Vec<ElementSet> = g
        .abelian_subgroups(true, limits.group_order)?
        .into_iter()
        .filter(|h| h.len() == expected_size)
        .collect();
    let mut expected = Vec::new();
    for i in 0..inst.rees.i_size() {
        for lambda in 0..inst.rees.lambda_size() {
            for h in &subgroups {
                expected.push(h.iter().map(|x| inst.translate(i, lambda, x)).collect::<ElementSet>());
            }
        }
    }
    expected.sort_by(|a, b| a.members().cmp(b.members()));
    expected.dedup();

    let failed = best != expected_size || found != expected;
    let result = CheckResult::new("max_commutative", &inst.name)
        .metric("max_size", best)
        .metric("expected_size", expected_size)
        .metric("witness_count", found.len())
        .metric("expected_witness_count", expected.len());
    Ok(result.fail_if(failed, || {
        let show = |sets: Vec<&ElementSet>| sets.into_iter().map(|s| inst.labels(s.iter())).collect::<Vec<_>>();
        json!({
            "missing": show(expected.iter().filter(|e| !found.contains(e)).collect()),
            "unexpected": show(found.iter().filter(|f| !expected.contains(f)).collect()),
        })
    }))
}

/// `ω(G(G))`, or `None` for abelian `G`.
fn group_clique_number(g: &FiniteGroup, limits: &Limits) -> Result<Option<usize>> {
    if g.is_abelian() {
        return Ok(None);
    }
    Ok(Some(clique_number(&commuting_graph(g)?.graph, limits)?.size))
}

pub fn check_clique_number(inst: &ReesInstance, limits: &Limits) -> Result<CheckResult> {
    inst.require_nontrivial_index()?;
    let g = inst.rees.group();
    let cg = commuting_graph(&inst.table)?;
    let clique = clique_number(&cg.graph, limits)?;
    let expected = match group_clique_number(g, limits)? {
        None => g.order(),
        Some(w) => g.center().len() + w,
    };
    let members = inst.labels(clique.members.iter().map(|&v| cg.element_of(v)));
    let failed = clique.size != expected || !clique.is_clique_of(&cg.graph);
    let mut result = CheckResult::new("clique_number", &inst.name)
        .metric("omega", clique.size)
        .metric("expected", expected);
    if failed {
        return Ok(result.fail(json!({ "omega": clique.size, "expected": expected, "clique": members })));
    }
    result.witness = Some(json!({ "clique": members }));
    Ok(result)
}

pub fn check_chromatic_number(inst: &ReesInstance, limits: &Limits) -> Result<CheckResult> {
    inst.require_nontrivial_index()?;
    let g = inst.rees.group();
    let cg = commuting_graph(&inst.table)?;
    let coloring = chromatic_number(&cg.graph, limits)?;
    let expected = if g.is_abelian() {
        g.order()
    } else {
        g.center().len() + chromatic_number(&commuting_graph(g)?.graph, limits)?.count
    };
    let failed = coloring.count != expected || !coloring.is_proper_for(&cg.graph);
    let mut result = CheckResult::new("chromatic_number", &inst.name)
        .metric("chi", coloring.count)
        .metric("expected", expected);
    if failed {
        return Ok(result.fail(json!({
            "chi": coloring.count,
            "expected": expected,
            "coloring": coloring.colors,
        })));
    }
    result.witness = Some(json!({ "coloring": coloring.colors }));
    Ok(result)
}

fn girth_metrics(result: CheckResult, girth: Option<usize>) -> CheckResult {
    match girth {
        Some(len) => result.metric("girth", len),
        None => result.metric("acyclic", 1),
    }
}

/// `|G| ≤ 2` gives an acyclic commuting graph, `|G| ≥ 3` gives girth 3.
pub fn check_girth(inst: &ReesInstance) -> Result<CheckResult> {
    inst.require_nontrivial_index()?;
    let cg = commuting_graph(&inst.table)?;
    let found = girth(&cg.graph);
    let expected = if inst.rees.group().order() <= 2 { None } else { Some(3) };
    let result = girth_metrics(CheckResult::new("girth", &inst.name), found);
    Ok(result.fail_if(found != expected, || json!({ "girth": found, "expected": expected })))
}

/// The commuting graph of a group is acyclic or has girth 3.
pub fn check_group_girth(group: &FiniteGroup, instance: &str) -> Result<CheckResult> {
    let cg = commuting_graph(group)?;
    let found = girth(&cg.graph);
    let result = girth_metrics(CheckResult::new("girth", instance), found);
    Ok(result.fail_if(found.is_some_and(|g| g != 3), || json!({ "girth": found })))
}

/// Exhaustive left-path search in any system. Results on systems of class
/// [`SystemClass::General`] are calibration controls.
pub fn check_no_left_paths_in(
    s: &MulSystem,
    instance: &str,
    class: SystemClass,
    limits: &Limits,
) -> Result<CheckResult> {
    let bound = s.order().saturating_sub(1).max(1);
    let found = find_left_path(s, bound, limits.path_budget)?;
    let mut result = CheckResult::new("no_left_paths", instance).metric("bound", bound);
    result.calibration = class == SystemClass::General;
    Ok(match found {
        Some(path) => {
            let labels: Vec<&str> = path.vertices.iter().map(|&x| s.label(x)).collect();
            result
                .metric("length", path.length())
                .fail(json!({ "left_path": labels }))
        }
        None => result,
    })
}

pub fn check_no_left_paths(inst: &ReesInstance, limits: &Limits) -> Result<CheckResult> {
    check_no_left_paths_in(&inst.table, &inst.name, SystemClass::Rees, limits)
}

pub fn check_group_no_left_paths(group: &FiniteGroup, instance: &str, limits: &Limits) -> Result<CheckResult> {
    check_no_left_paths_in(group, instance, SystemClass::Group, limits)
}

/// `M(C_n; 2, 1; P)` has clique number and chromatic number `n`.
pub fn check_attainability(n: usize, limits: &Limits) -> Result<CheckResult> {
    if n == 0 {
        return Err(Error::PreconditionViolated("n must be at least 1".into()));
    }
    let g = cyclic(n);
    let p = SandwichMatrix::identity(&g, 1, 2);
    let rees = ReesMatrixSemigroup::build_with_cap(g, 2, 1, p, limits.rees_order)?;
    let s = rees.as_system();
    let cg = commuting_graph(s)?;
    let clique = clique_number(&cg.graph, limits)?;
    let coloring = chromatic_number(&cg.graph, limits)?;
    let valid = clique.is_clique_of(&cg.graph) && coloring.is_proper_for(&cg.graph);
    let members: Vec<&str> = clique.members.iter().map(|&v| s.label(cg.element_of(v))).collect();
    let certificate: Value = json!({ "clique": members, "coloring": coloring.colors });
    let mut result = CheckResult::new("attainability", &rees_instance_name(&format!("C{n}"), 2, 1, "identity"))
        .metric("n", n)
        .metric("omega", clique.size)
        .metric("chi", coloring.count);
    if clique.size != n || coloring.count != n || !valid {
        return Ok(result.fail(certificate));
    }
    result.witness = Some(certificate);
    Ok(result)
}
