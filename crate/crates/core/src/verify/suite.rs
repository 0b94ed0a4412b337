use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::*;
use super::{CheckResult, Verdict};
use crate::algebra::{named_group_with_cap, FiniteGroup};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rees::{ReesMatrixSemigroup, SandwichMatrix};

/// Check ids in the order they are reported for each instance.
pub const CHECK_IDS: &[&str] = &[
    "center_empty",
    "commutation_lemma",
    "translation_lemma",
    "component_structure",
    "matrix_independence",
    "max_commutative",
    "clique_number",
    "chromatic_number",
    "girth",
    "no_left_paths",
    "attainability",
];

/// Checks that also run on non-abelian groups themselves.
const GROUP_CHECKS: &[&str] = &["girth", "no_left_paths"];

/// Groups × index pairs × seeds, with the checks to run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteFixture {
    pub groups: Vec<String>,
    /// `[|I|, |Λ|]` pairs.
    pub index_pairs: Vec<[usize; 2]>,
    pub seeds: Vec<u64>,
    #[serde(default = "all_checks")]
    pub checks: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault_injection: Option<Fault>,
}

fn all_checks() -> Vec<String> {
    vec!["all".into()]
}

impl SuiteFixture {
    /// `{C1..C6, C2×C2, S3, D4, Q8} × {(1,2),(2,1),(2,2),(3,2)} × {0,1}`.
    pub fn default_matrix() -> Self {
        SuiteFixture {
            groups: ["C1", "C2", "C3", "C4", "C5", "C6", "C2 x C2", "S3", "D4", "Q8"]
                .map(String::from)
                .to_vec(),
            index_pairs: vec![[1, 2], [2, 1], [2, 2], [3, 2]],
            seeds: vec![0, 1],
            checks: all_checks(),
            fault_injection: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let fixture: SuiteFixture = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        fixture.selected_checks()?;
        Ok(fixture)
    }

    /// Selected check ids in canonical order; unknown ids are an error.
    pub fn selected_checks(&self) -> Result<Vec<&'static str>> {
        for id in &self.checks {
            if id != "all" && !CHECK_IDS.contains(&id.as_str()) {
                return Err(Error::Parse(format!("unknown check id {id:?}")));
            }
        }
        if self.checks.iter().any(|c| c == "all") {
            return Ok(CHECK_IDS.to_vec());
        }
        Ok(CHECK_IDS
            .iter()
            .copied()
            .filter(|id| self.checks.iter().any(|c| c == id))
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteMode {
    #[default]
    Full,
    /// First seed only.
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Failing calibration controls; expected, not counted in `failed`.
    pub calibration: usize,
}

impl SuiteSummary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = SuiteSummary {
            total: results.len(),
            ..Self::default()
        };
        for r in results {
            match r.verdict {
                Verdict::Pass => s.passed += 1,
                Verdict::Skipped => s.skipped += 1,
                Verdict::Fail if r.calibration => s.calibration += 1,
                Verdict::Fail => s.failed += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

enum Job<'a> {
    Rees {
        spec: &'a str,
        group: &'a std::result::Result<FiniteGroup, Error>,
        i_size: usize,
        lambda_size: usize,
        seed: u64,
    },
    Group {
        spec: &'a str,
        group: &'a FiniteGroup,
    },
    Attain(usize),
}

fn cyclic_order(spec: &str) -> Option<usize> {
    let digits = spec.trim().strip_prefix('C')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&n| n >= 1)
}

/// Runs every selected check on every instance of the fixture matrix.
///
/// Each group contributes its Rees instances (pairs × seeds, random
/// sandwich matrices), then itself as a group when non-abelian, then the
/// attainability construction when it is cyclic. Instances run in parallel
/// and results keep this order. Per-instance errors become skipped results;
/// only malformed fixtures are errors.
pub fn run_suite(fixture: &SuiteFixture, mode: SuiteMode, limits: &Limits) -> Result<Vec<CheckResult>> {
    let checks = fixture.selected_checks()?;
    let groups = fixture
        .groups
        .iter()
        .map(|spec| match named_group_with_cap(spec, limits.group_order) {
            Err(e) if !e.is_resource_limit() => Err(e),
            other => Ok(other),
        })
        .collect::<Result<Vec<_>>>()?;
    let seeds = match mode {
        SuiteMode::Full => &fixture.seeds[..],
        SuiteMode::Fast => &fixture.seeds[..fixture.seeds.len().min(1)],
    };

    let mut jobs = Vec::new();
    for (spec, group) in fixture.groups.iter().zip(&groups) {
        for &[i_size, lambda_size] in &fixture.index_pairs {
            for &seed in seeds {
                jobs.push(Job::Rees {
                    spec,
                    group,
                    i_size,
                    lambda_size,
                    seed,
                });
            }
        }
        if let Ok(g) = group {
            if !g.is_abelian() && checks.iter().any(|c| GROUP_CHECKS.contains(c)) {
                jobs.push(Job::Group { spec, group: g });
            }
        }
        if checks.contains(&"attainability") {
            if let Some(n) = cyclic_order(spec) {
                jobs.push(Job::Attain(n));
            }
        }
    }

    let results: Vec<Vec<CheckResult>> = jobs
        .par_iter()
        .map(|job| run_job(job, &checks, fixture.fault_injection, limits))
        .collect();
    Ok(results.into_iter().flatten().collect())
}

fn settle(id: &str, instance: &str, outcome: Result<CheckResult>) -> CheckResult {
    outcome.unwrap_or_else(|e| CheckResult::skipped(id, instance, e.to_string()))
}

fn run_job(job: &Job, checks: &[&str], fault: Option<Fault>, limits: &Limits) -> Vec<CheckResult> {
    match *job {
        Job::Rees {
            spec,
            group,
            i_size,
            lambda_size,
            seed,
        } => {
            let name = rees_instance_name(spec, i_size, lambda_size, &format!("seed {seed}"));
            let rees_checks: Vec<&str> = checks.iter().copied().filter(|&c| c != "attainability").collect();
            let built = group.clone().and_then(|g| {
                let p = SandwichMatrix::random(&g, lambda_size, i_size, seed);
                ReesMatrixSemigroup::build_with_cap(g, i_size, lambda_size, p, limits.rees_order)
            });
            let rees = match built {
                Ok(r) => r,
                Err(e) => {
                    return rees_checks
                        .iter()
                        .map(|id| CheckResult::skipped(id, &name, e.to_string()))
                        .collect()
                }
            };
            let inst = match fault {
                Some(f) => ReesInstance::with_fault(rees, &name, f),
                None => ReesInstance::new(rees, &name),
            };
            rees_checks
                .iter()
                .map(|&id| {
                    let outcome = match id {
                        "center_empty" => check_center_empty(&inst),
                        "commutation_lemma" => check_commutation_lemma(&inst),
                        "translation_lemma" => check_translation_lemma(&inst),
                        "component_structure" => check_component_structure(&inst, limits),
                        "matrix_independence" => {
                            let r = inst.rees();
                            let p2 = SandwichMatrix::random(r.group(), lambda_size, i_size, seed.wrapping_add(1));
                            check_matrix_independence(r.group(), i_size, lambda_size, r.sandwich(), &p2, &name, limits)
                        }
                        "max_commutative" => check_max_commutative(&inst, limits),
                        "clique_number" => check_clique_number(&inst, limits),
                        "chromatic_number" => check_chromatic_number(&inst, limits),
                        "girth" => check_girth(&inst),
                        "no_left_paths" => check_no_left_paths(&inst, limits),
                        other => unreachable!("unhandled check id {other}"),
                    };
                    settle(id, &name, outcome)
                })
                .collect()
        }
        Job::Group { spec, group } => {
            let name = format!("{spec} (group)");
            checks
                .iter()
                .copied()
                .filter(|c| GROUP_CHECKS.contains(c))
                .map(|id| {
                    let outcome = match id {
                        "girth" => check_group_girth(group, &name),
                        _ => check_group_no_left_paths(group, &name, limits),
                    };
                    settle(id, &name, outcome)
                })
                .collect()
        }
        Job::Attain(n) => {
            let name = rees_instance_name(&format!("C{n}"), 2, 1, "identity");
            vec![settle("attainability", &name, check_attainability(n, limits))]
        }
    }
}
