//! Rees spec files and analysis reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{named_group_with_cap, FiniteGroup, MulSystem};
use crate::commuting::{commuting_graph, extended_commuting_graph, knit_degree, KnitDegree, SystemClass};
use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic, chromatic_number, clique_number, connected_components, diameter, girth, induced_subgraph,
    ExtendedNat,
};
use crate::limits::Limits;
use crate::rees::{ReesMatrixSemigroup, SandwichMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named(String),
    Cayley { cayley: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntry {
    Index(usize),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    /// `"random"` or `"identity"`.
    Keyword(String),
    /// `|Λ|` rows of `|I|` entries.
    Rows(Vec<Vec<MatrixEntry>>),
}

/// Rees spec file contents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReesSpec {
    pub group: GroupSpec,
    pub i_size: usize,
    pub lambda_size: usize,
    pub p: MatrixSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// What an analysis runs on: a Rees matrix semigroup, or a bare group.
#[derive(Debug, Clone)]
pub enum Subject {
    Rees(ReesMatrixSemigroup),
    Group(FiniteGroup),
}

impl Subject {
    pub fn system(&self) -> &MulSystem {
        match self {
            Subject::Rees(r) => r.as_system(),
            Subject::Group(g) => g,
        }
    }
}

/// Echo of the resolved input, enough to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    pub mode: String,
    pub group: String,
    pub group_order: usize,
    pub i_size: usize,
    pub lambda_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Sandwich matrix by element label, `|Λ|` rows of `|I|` entries.
    pub p: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct ResolvedSpec {
    pub subject: Subject,
    pub echo: InstanceEcho,
}

impl ReesSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Builds the semigroup. `as_group` (or `|I| = |Λ| = 1`) analyzes the
    /// group itself.
    pub fn resolve(&self, as_group: bool, limits: &Limits) -> Result<ResolvedSpec> {
        let (name, group) = match &self.group {
            GroupSpec::Named(spec) => (spec.clone(), named_group_with_cap(spec, limits.group_order)?),
            GroupSpec::Cayley { cayley } => ("cayley".to_string(), FiniteGroup::from_system(MulSystem::from_cayley_text(cayley)?)?),
        };
        let (rows, cols) = (self.lambda_size, self.i_size);
        let p = match &self.p {
            MatrixSpec::Keyword(k) if k == "random" => {
                let seed = self
                    .seed
                    .ok_or_else(|| Error::Parse("seed is required when p is \"random\"".into()))?;
                SandwichMatrix::random(&group, rows, cols, seed)
            }
            MatrixSpec::Keyword(k) if k == "identity" => SandwichMatrix::identity(&group, rows, cols),
            MatrixSpec::Keyword(k) => return Err(Error::Parse(format!("unknown matrix keyword {k:?}"))),
            MatrixSpec::Rows(entries) => {
                let resolved = entries
                    .iter()
                    .map(|row| row.iter().map(|e| resolve_entry(&group, e)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                SandwichMatrix::new(resolved)?
            }
        };
        let group_mode = as_group || (self.i_size == 1 && self.lambda_size == 1);
        let rees = ReesMatrixSemigroup::build_with_cap(group.clone(), self.i_size, self.lambda_size, p, limits.rees_order)?;
        let echo = InstanceEcho {
            mode: if group_mode { "group" } else { "rees" }.into(),
            group: name,
            group_order: group.order(),
            i_size: self.i_size,
            lambda_size: self.lambda_size,
            seed: matches!(&self.p, MatrixSpec::Keyword(k) if k == "random").then_some(self.seed).flatten(),
            p: rees
                .sandwich()
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|&x| group.label(x).to_string()).collect())
                .collect(),
        };
        let subject = if group_mode { Subject::Group(group) } else { Subject::Rees(rees) };
        Ok(ResolvedSpec { subject, echo })
    }
}

fn resolve_entry(group: &FiniteGroup, entry: &MatrixEntry) -> Result<usize> {
    match entry {
        MatrixEntry::Index(i) if *i < group.order() => Ok(*i),
        MatrixEntry::Index(i) => Err(Error::IndexOutOfRange {
            context: "sandwich entry".into(),
            index: *i,
            bound: group.order(),
        }),
        MatrixEntry::Label(l) => group.index_of(l).ok_or_else(|| Error::InvalidLabel(l.clone())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub size: usize,
    pub diameter: ExtendedNat,
    pub girth: Option<usize>,
    /// Absent in group mode.
    pub iso_to_extended_group_graph: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueReport {
    pub size: usize,
    /// Element labels of the lexicographically least maximum clique.
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub count: usize,
    /// Color of each vertex, in vertex (ascending element) order.
    pub colors: Vec<usize>,
}

/// Invariants of the commuting graph of one semigroup or group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub instance: InstanceEcho,
    pub order: usize,
    pub center_size: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub per_component: Vec<ComponentReport>,
    pub girth: Option<usize>,
    pub clique_number: CliqueReport,
    pub chromatic_number: ColoringReport,
    pub knit_degree: KnitDegree,
    /// Milliseconds per stage; only when requested, so reports stay
    /// byte-identical by default.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<BTreeMap<String, u64>>,
}

struct Stopwatch {
    enabled: bool,
    last: Instant,
    laps: BTreeMap<String, u64>,
}

impl Stopwatch {
    fn lap(&mut self, name: &str) {
        if self.enabled {
            let now = Instant::now();
            self.laps
                .insert(name.to_string(), (now - self.last).as_millis() as u64);
            self.last = now;
        }
    }
}

pub fn analyze(resolved: &ResolvedSpec, limits: &Limits, timings: bool) -> Result<AnalysisReport> {
    let mut clock = Stopwatch {
        enabled: timings,
        last: Instant::now(),
        laps: BTreeMap::new(),
    };
    let s = resolved.subject.system();
    let center_size = s.center().len();
    let cg = commuting_graph(s)?;
    let g = &cg.graph;
    clock.lap("graph");

    let ext_group = match &resolved.subject {
        Subject::Rees(r) => Some(extended_commuting_graph(r.group()).graph),
        Subject::Group(_) => None,
    };
    let mut per_component = Vec::new();
    for comp in connected_components(g) {
        let sub = induced_subgraph(g, &comp)?.graph;
        let iso = match &ext_group {
            Some(e) => Some(are_isomorphic(&sub, e, limits)?.is_some()),
            None => None,
        };
        per_component.push(ComponentReport {
            size: comp.len(),
            diameter: diameter(&sub)?,
            girth: girth(&sub),
            iso_to_extended_group_graph: iso,
        });
    }
    clock.lap("components");

    let clique = clique_number(g, limits)?;
    clock.lap("clique_number");
    let coloring = chromatic_number(g, limits)?;
    clock.lap("chromatic_number");
    let class = match resolved.subject {
        Subject::Rees(_) => SystemClass::Rees,
        Subject::Group(_) => SystemClass::Group,
    };
    let knit = knit_degree(s, g.vertex_count().saturating_sub(1).max(1), class, limits.path_budget)?;
    clock.lap("knit_degree");

    Ok(AnalysisReport {
        instance: resolved.echo.clone(),
        order: s.order(),
        center_size,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        component_count: per_component.len(),
        per_component,
        girth: girth(g),
        clique_number: CliqueReport {
            size: clique.size,
            members: clique
                .members
                .iter()
                .map(|&v| s.label(cg.element_of(v)).to_string())
                .collect(),
        },
        chromatic_number: ColoringReport {
            count: coloring.count,
            colors: coloring.colors,
        },
        knit_degree: knit,
        timings: timings.then_some(clock.laps),
    })
}

/// DOT text of the commuting graph, or of the extended commuting graph.
pub fn export_dot(subject: &Subject, extended: bool) -> Result<String> {
    let s = subject.system();
    Ok(if extended {
        extended_commuting_graph(s).graph.to_dot("extended_commuting_graph")
    } else {
        commuting_graph(s)?.graph.to_dot("commuting_graph")
    })
}

/// Serializes with two-space indentation and a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}
