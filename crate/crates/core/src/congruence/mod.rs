//! Congruence checkers and the data-driven template engine.
//!
//! All verdicts follow the same discipline: congruences between rationals
//! are decided by the p-adic valuation of an exact difference, precondition
//! violations are skips rather than failures, and every pass or fail
//! carries the exact witness whose valuation was tested.

pub mod checkers;
pub mod template;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use checkers::{
    denominator_support, hurwitz_denominator_law, kummer_classical, kummer_sweep,
    universal_von_staudt_even, universal_von_staudt_odd, universal_von_staudt_sweep,
    von_staudt_classical, von_staudt_sweep,
};
pub use template::{template_sweep, CongruenceTemplate};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skip => "skip",
        })
    }
}

/// One evaluated case of a checker or template.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepCell {
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl SweepCell {
    fn params_from<const N: usize>(pairs: [(&str, u64); N]) -> BTreeMap<String, String> {
        pairs
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    pub fn pass<const N: usize>(params: [(&str, u64); N], witness: String) -> Self {
        SweepCell {
            params: Self::params_from(params),
            verdict: Verdict::Pass,
            reason: None,
            witness: Some(witness),
        }
    }

    pub fn fail<const N: usize>(params: [(&str, u64); N], witness: String, reason: String) -> Self {
        SweepCell {
            params: Self::params_from(params),
            verdict: Verdict::Fail,
            reason: Some(reason),
            witness: Some(witness),
        }
    }

    pub fn skip<const N: usize>(params: [(&str, u64); N], reason: String) -> Self {
        SweepCell {
            params: Self::params_from(params),
            verdict: Verdict::Skip,
            reason: Some(reason),
            witness: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

/// A full sweep: id, every cell in deterministic order, verdict counts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub template_id: String,
    pub cells: Vec<SweepCell>,
    pub summary: Summary,
}

impl Report {
    pub fn new(id: impl Into<String>, cells: Vec<SweepCell>) -> Self {
        let mut summary = Summary { pass: 0, fail: 0, skip: 0 };
        for cell in &cells {
            match cell.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Skip => summary.skip += 1,
            }
        }
        Report { template_id: id.into(), cells, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Result of a single named check: the checker id plus its cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub checker: &'static str,
    pub cell: SweepCell,
}

impl CheckResult {
    pub fn verdict(&self) -> Verdict {
        self.cell.verdict
    }

    pub fn is_pass(&self) -> bool {
        self.cell.verdict == Verdict::Pass
    }

    pub fn witness(&self) -> Option<&str> {
        self.cell.witness.as_deref()
    }
}
