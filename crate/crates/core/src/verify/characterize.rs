use serde::{Deserialize, Serialize};

use super::catalog::GroupCatalog;
use crate::commuting::{commuting_graph, extended_commuting_graph};
use crate::error::Error;
use crate::graph::{are_isomorphic, connected_components, induced_subgraph, SimpleGraph};
use crate::limits::Limits;
use crate::rees::{ReesMatrixSemigroup, SandwichMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Satisfied,
    Refuted,
    Undecided,
}

/// What was established about one of the two conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    /// 1: commuting graph of a non-abelian group. 2: at least two components,
    /// each isomorphic to the extended commuting graph of one group.
    pub condition: u8,
    pub outcome: Outcome,
    pub reason: String,
}

/// A semigroup `M(G; 1, Λ; identity)` whose commuting graph is the input
/// graph, with the vertex bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesWitness {
    pub group: String,
    pub group_order: usize,
    pub i_size: usize,
    pub lambda_size: usize,
    /// `mapping[v]` is the witness-graph vertex matched with input vertex `v`.
    pub mapping: Vec<usize>,
    /// Element label of each `mapping[v]`.
    pub elements: Vec<String>,
}

impl ReesWitness {
    /// Rebuilds the semigroup and confirms the bijection is an isomorphism.
    pub fn recheck(&self, g: &SimpleGraph) -> bool {
        let Ok(group) = crate::algebra::named_group(&self.group) else {
            return false;
        };
        let p = SandwichMatrix::identity(&group, self.lambda_size, self.i_size);
        let Ok(rees) = ReesMatrixSemigroup::build(group, self.i_size, self.lambda_size, p) else {
            return false;
        };
        let Ok(cg) = commuting_graph(rees.as_system()) else {
            return false;
        };
        crate::graph::IsoWitness {
            mapping: self.mapping.clone(),
        }
        .verify(g, &cg.graph)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationVerdict {
    pub answer: Answer,
    pub witness: Option<ReesWitness>,
    pub refutation: Vec<Refutation>,
    pub catalog_bound_used: usize,
}

enum Search {
    Found(ReesWitness),
    Outcome(Refutation),
}

/// Decides whether `g` is the commuting graph of a completely simple
/// semigroup, within the coverage of `catalog`.
///
/// Condition (2) needs a group of order equal to the component size.
/// Condition (1) needs a non-abelian `H` with `|H| - |Z(H)| = v`; since
/// `|Z(H)| ≤ |H|/4`, only orders up to `⌊4v/3⌋` are possible. A negative
/// answer is given only when every needed order is inside catalog coverage.
pub fn characterize_graph(g: &SimpleGraph, catalog: &GroupCatalog) -> CharacterizationVerdict {
    characterize_graph_with_limits(g, catalog, &Limits::default())
}

pub fn characterize_graph_with_limits(
    g: &SimpleGraph,
    catalog: &GroupCatalog,
    limits: &Limits,
) -> CharacterizationVerdict {
    let mut refutation = Vec::new();
    for search in [condition_two(g, catalog, limits), condition_one(g, catalog, limits)] {
        match search {
            Search::Found(witness) => {
                return CharacterizationVerdict {
                    answer: Answer::Yes,
                    witness: Some(witness),
                    refutation,
                    catalog_bound_used: catalog.complete_up_to(),
                }
            }
            Search::Outcome(r) => refutation.push(r),
        }
    }
    let answer = if refutation.iter().all(|r| r.outcome == Outcome::Refuted) {
        Answer::No
    } else {
        Answer::Unknown
    };
    CharacterizationVerdict {
        answer,
        witness: None,
        refutation,
        catalog_bound_used: catalog.complete_up_to(),
    }
}

fn outcome(condition: u8, outcome: Outcome, reason: String) -> Search {
    Search::Outcome(Refutation {
        condition,
        outcome,
        reason,
    })
}

/// Isomorphism with over-cap treated as undecided.
fn iso(g: &SimpleGraph, h: &SimpleGraph, limits: &Limits) -> Result<Option<Vec<usize>>, Error> {
    are_isomorphic(g, h, limits).map(|w| w.map(|w| w.mapping))
}

fn witness_for(
    g: &SimpleGraph,
    name: &str,
    group: &crate::algebra::FiniteGroup,
    i_size: usize,
    lambda_size: usize,
    limits: &Limits,
) -> Result<Option<ReesWitness>, Error> {
    let p = SandwichMatrix::identity(group, lambda_size, i_size);
    let rees = ReesMatrixSemigroup::build_with_cap(group.clone(), i_size, lambda_size, p, limits.rees_order)?;
    let cg = commuting_graph(rees.as_system())?;
    let Some(mapping) = iso(g, &cg.graph, limits)? else {
        return Ok(None);
    };
    let elements = mapping
        .iter()
        .map(|&v| rees.as_system().label(cg.element_of(v)).to_string())
        .collect();
    Ok(Some(ReesWitness {
        group: name.to_string(),
        group_order: group.order(),
        i_size,
        lambda_size,
        mapping,
        elements,
    }))
}

fn condition_two(g: &SimpleGraph, catalog: &GroupCatalog, limits: &Limits) -> Search {
    let comps = connected_components(g);
    let m = comps.len();
    if m < 2 {
        return outcome(2, Outcome::Refuted, format!("graph has {m} component(s)"));
    }
    let first = induced_subgraph(g, &comps[0]).expect("component vertices are valid").graph;
    for comp in &comps[1..] {
        let other = induced_subgraph(g, comp).expect("component vertices are valid").graph;
        match iso(&first, &other, limits) {
            Ok(Some(_)) => {}
            Ok(None) => {
                return outcome(2, Outcome::Refuted, "components are not mutually isomorphic".into());
            }
            Err(e) => return outcome(2, Outcome::Undecided, e.to_string()),
        }
    }
    let size = comps[0].len();
    for entry in catalog.of_order(size) {
        let ext = extended_commuting_graph(&entry.group);
        match iso(&ext.graph, &first, limits) {
            Ok(Some(_)) => {}
            Ok(None) => continue,
            Err(e) => return outcome(2, Outcome::Undecided, e.to_string()),
        }
        match witness_for(g, &entry.name, &entry.group, 1, m, limits) {
            Ok(Some(w)) => return Search::Found(w),
            Ok(None) => {
                return outcome(2, Outcome::Undecided, format!("witness for {} failed to reconstruct", entry.name));
            }
            Err(e) => return outcome(2, Outcome::Undecided, e.to_string()),
        }
    }
    if size <= catalog.complete_up_to() {
        outcome(
            2,
            Outcome::Refuted,
            format!("no group of order {size} has extended commuting graph isomorphic to a component"),
        )
    } else {
        outcome(
            2,
            Outcome::Undecided,
            format!("component size {size} exceeds catalog coverage {}", catalog.complete_up_to()),
        )
    }
}

fn condition_one(g: &SimpleGraph, catalog: &GroupCatalog, limits: &Limits) -> Search {
    let v = g.vertex_count();
    let bound = 4 * v / 3;
    for entry in catalog.entries() {
        let h = &entry.group;
        if h.order() <= v || h.order() > bound || h.is_abelian() || h.order() - h.center().len() != v {
            continue;
        }
        match witness_for(g, &entry.name, h, 1, 1, limits) {
            Ok(Some(w)) => return Search::Found(w),
            Ok(None) => {}
            Err(e) => return outcome(1, Outcome::Undecided, e.to_string()),
        }
    }
    if bound <= catalog.complete_up_to() {
        outcome(
            1,
            Outcome::Refuted,
            format!("no non-abelian group of order at most {bound} has this commuting graph"),
        )
    } else {
        outcome(
            1,
            Outcome::Undecided,
            format!("order bound {bound} exceeds catalog coverage {}", catalog.complete_up_to()),
        )
    }
}
