//! Instance-level checkers for the structural results on commuting graphs of
//! Rees matrix semigroups, the graph characterization procedure, and the
//! suite runner that drives them over a fixture matrix.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

mod catalog;
mod characterize;
mod checks;
mod suite;

pub use catalog::{CatalogEntry, GroupCatalog, CATALOG_COMPLETE_UP_TO};
pub use characterize::{
    characterize_graph, characterize_graph_with_limits, Answer, CharacterizationVerdict, Outcome, Refutation,
    ReesWitness,
};
pub use checks::*;
pub use suite::{run_suite, SuiteFixture, SuiteMode, SuiteSummary, CHECK_IDS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check on one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub instance: String,
    pub verdict: Verdict,
    /// Counterexample on failure; some passing checks also keep a certificate.
    pub witness: Option<serde_json::Value>,
    pub metrics: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    /// Positive controls for the detectors; a failing calibration result is
    /// expected and does not count as a violation.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub calibration: bool,
}

impl CheckResult {
    pub(crate) fn new(check_id: &str, instance: &str) -> Self {
        CheckResult {
            check_id: check_id.to_string(),
            instance: instance.to_string(),
            verdict: Verdict::Pass,
            witness: None,
            metrics: BTreeMap::new(),
            reason: None,
            calibration: false,
        }
    }

    pub(crate) fn skipped(check_id: &str, instance: &str, reason: String) -> Self {
        CheckResult {
            verdict: Verdict::Skipped,
            reason: Some(reason),
            ..CheckResult::new(check_id, instance)
        }
    }

    pub(crate) fn metric(mut self, name: &str, value: impl TryInto<i64>) -> Self {
        self.metrics
            .insert(name.to_string(), value.try_into().unwrap_or(i64::MAX));
        self
    }

    pub(crate) fn fail(mut self, witness: serde_json::Value) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    pub(crate) fn fail_if(self, failed: bool, witness: impl FnOnce() -> serde_json::Value) -> Self {
        if failed {
            self.fail(witness())
        } else {
            self
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// A failure that is not an expected calibration outcome.
    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Fail && !self.calibration
    }
}
