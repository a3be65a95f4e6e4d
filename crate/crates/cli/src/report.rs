//! Machine-readable reports.

use std::fmt;

use oplax_core::structures::CheckReport;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{EXIT_FAIL, EXIT_PASS};

pub const TOOL: &str = "ohl";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool: String,
    pub version: String,
    pub schema_version: u32,
    /// `sha256:` followed by the hex digest of the input bytes.
    pub input_digest: String,
    pub kind: String,
    pub backend: String,
    pub summary: Summary,
    pub records: Vec<Record>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleOut>,
}

/// The offending apex element as a coordinate tuple, with its images
/// under the two legs when it belongs to a span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleOut {
    pub tuple: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feet: Option<Feet>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Feet {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl ReportFile {
    pub fn new(kind: &str, backend: &str, input_digest: String, r: &CheckReport) -> Self {
        let records: Vec<Record> = r
            .records
            .iter()
            .map(|a| Record {
                id: a.id.clone(),
                status: if a.passed { Status::Pass } else { Status::Fail },
                counterexample: a.counterexample.as_ref().map(|c| CounterexampleOut {
                    tuple: c.element.clone(),
                    feet: c.feet.clone().map(|(left, right)| Feet { left, right }),
                    detail: c.detail.clone(),
                }),
            })
            .collect();
        let passed = records.iter().filter(|r| r.status == Status::Pass).count();
        let failed = records.len() - passed;
        ReportFile {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            schema_version: crate::schema::SCHEMA_VERSION,
            input_digest,
            kind: kind.into(),
            backend: backend.into(),
            summary: Summary {
                total: records.len(),
                passed,
                failed,
                status: if failed == 0 { Status::Pass } else { Status::Fail },
            },
            records,
        }
    }

    /// Pretty JSON with a trailing newline; identical reports serialize to
    /// identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> u8 {
        match self.summary.status {
            Status::Pass => EXIT_PASS,
            Status::Fail => EXIT_FAIL,
        }
    }
}

fn tuple(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for ReportFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            match (&r.status, &r.counterexample) {
                (Status::Pass, _) => writeln!(f, "PASS  {}", r.id)?,
                (Status::Fail, Some(c)) => {
                    write!(f, "FAIL  {} at {}", r.id, tuple(&c.tuple))?;
                    if let Some(feet) = &c.feet {
                        write!(f, " over {} -> {}", tuple(&feet.left), tuple(&feet.right))?;
                    }
                    writeln!(f, ": {}", c.detail)?;
                }
                (Status::Fail, None) => writeln!(f, "FAIL  {}", r.id)?,
            }
        }
        let s = &self.summary;
        let verdict = match s.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        writeln!(f, "{} over {}: {}/{} axioms hold, {verdict}", self.kind, self.backend, s.passed, s.total)
    }
}
