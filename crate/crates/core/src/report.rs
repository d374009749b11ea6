//! Structured outcome of one check on one instance.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::bary::TriangleMetric;
use crate::scalar::{Backend, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The sample hit a configuration the statement excludes.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubVerdict {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub backend: Backend,
    pub seed: u64,
    pub trial: usize,
    pub triangle: [String; 3],
    pub inputs: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub sub_verdicts: Vec<SubVerdict>,
    pub witnesses: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub downgrades: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn sub(&self, name: &str) -> Option<bool> {
        self.sub_verdicts.iter().find(|s| s.name == name).map(|s| s.pass)
    }

    pub fn with_provenance(mut self, seed: u64, trial: usize) -> Self {
        self.seed = seed;
        self.trial = trial;
        self
    }

    pub fn failed_subs(&self) -> Vec<&str> {
        self.sub_verdicts.iter().filter(|s| !s.pass).map(|s| s.name.as_str()).collect()
    }
}

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Scalar as its wire string.
pub fn wire<S: Scalar>(x: &S) -> Value {
    Value::String(x.to_wire())
}

pub struct ReportBuilder {
    report: CheckReport,
    degenerate: Option<String>,
}

impl ReportBuilder {
    pub fn new<S: Scalar>(check_id: &str, t: &TriangleMetric<S>) -> Self {
        ReportBuilder {
            report: CheckReport {
                check_id: check_id.to_string(),
                backend: S::BACKEND,
                seed: 0,
                trial: 0,
                triangle: t.wire_sides(),
                inputs: BTreeMap::new(),
                verdict: Verdict::Pass,
                sub_verdicts: Vec::new(),
                witnesses: BTreeMap::new(),
                counterexample: None,
                downgrades: Vec::new(),
                notes: Vec::new(),
            },
            degenerate: None,
        }
    }

    pub fn input<T: Serialize>(&mut self, name: &str, v: T) -> &mut Self {
        self.report.inputs.insert(name.to_string(), to_value(v));
        self
    }

    pub fn check(&mut self, name: &str, pass: bool) -> bool {
        self.report.sub_verdicts.push(SubVerdict { name: name.to_string(), pass });
        pass
    }

    pub fn witness<T: Serialize>(&mut self, name: &str, v: T) -> &mut Self {
        self.report.witnesses.insert(name.to_string(), to_value(v));
        self
    }

    pub fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.report.notes.push(s.into());
        self
    }

    pub fn downgrade(&mut self, s: impl Into<String>) -> &mut Self {
        self.report.downgrades.push(s.into());
        self
    }

    /// Marks the sample as outside the statement's hypotheses.
    pub fn degenerate(&mut self, reason: impl Into<String>) -> &mut Self {
        self.degenerate = Some(reason.into());
        self
    }

    /// Merges sub-verdicts and witnesses of another report under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: &CheckReport) {
        for s in &other.sub_verdicts {
            self.check(&format!("{prefix}.{}", s.name), s.pass);
        }
        for (k, v) in &other.witnesses {
            self.report.witnesses.insert(format!("{prefix}.{k}"), v.clone());
        }
        self.report.downgrades.extend(other.downgrades.iter().cloned());
        self.report.notes.extend(other.notes.iter().map(|n| format!("{prefix}: {n}")));
    }

    pub fn finish(mut self) -> CheckReport {
        let r = &mut self.report;
        if let Some(reason) = self.degenerate {
            r.verdict = Verdict::Degenerate;
            r.notes.push(format!("degenerate sample: {reason}"));
            return self.report;
        }
        let failed: Vec<String> =
            r.sub_verdicts.iter().filter(|s| !s.pass).map(|s| s.name.clone()).collect();
        if failed.is_empty() {
            r.verdict = Verdict::Pass;
        } else {
            r.verdict = Verdict::Fail;
            r.counterexample = Some(serde_json::json!({
                "failed": failed,
                "triangle": r.triangle.clone(),
                "inputs": r.inputs.clone(),
            }));
        }
        self.report
    }
}
