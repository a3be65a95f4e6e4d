use std::fmt;

use crate::spanv::{Mismatch, SpanVError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Decoded apex element.
    pub element: Vec<usize>,
    /// Leg images of `element`, when it is an apex element of a 1-cell.
    pub feet: Option<(Vec<usize>, Vec<usize>)>,
    pub detail: String,
}

impl From<Mismatch> for Counterexample {
    fn from(m: Mismatch) -> Self {
        Counterexample { element: m.element, feet: m.feet, detail: m.detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomRecord {
    pub id: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub records: Vec<AxiomRecord>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.records.push(AxiomRecord { id: id.into(), passed: true, counterexample: None });
    }

    pub fn fail(&mut self, id: impl Into<String>, cx: Counterexample) {
        self.records.push(AxiomRecord { id: id.into(), passed: false, counterexample: Some(cx) });
    }

    /// Record the outcome of a comparison: `None` means the two sides agree.
    pub fn record(&mut self, id: impl Into<String>, outcome: Option<Counterexample>) {
        match outcome {
            None => self.pass(id),
            Some(cx) => self.fail(id, cx),
        }
    }

    /// Record a comparison that may also fail to evaluate, which counts as a
    /// failure with the engine error as detail.
    pub fn record_eval(&mut self, id: impl Into<String>, outcome: Result<Option<Mismatch>, SpanVError>) {
        match outcome {
            Ok(m) => self.record(id, m.map(Counterexample::from)),
            Err(e) => self.fail(id, error_counterexample(&e)),
        }
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.records.extend(other.records);
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        self.records.extend(other.records.into_iter().map(|mut r| {
            r.id = format!("{prefix}.{}", r.id);
            r
        }));
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn get(&self, id: &str) -> Option<&AxiomRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.failures().map(|r| r.id.as_str()).collect()
    }
}

/// Counterexample carried by an engine error; errors without an element
/// report an empty tuple.
pub fn error_counterexample(e: &SpanVError) -> Counterexample {
    let element = match e {
        SpanVError::ComponentShapeError { element }
        | SpanVError::TriangleViolation { element }
        | SpanVError::FactorizationViolation { element } => element.clone(),
        _ => Vec::new(),
    };
    Counterexample { element, feet: None, detail: e.to_string() }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            match &r.counterexample {
                None => writeln!(f, "{:<28} pass", r.id)?,
                Some(cx) => writeln!(f, "{:<28} FAIL at {:?}: {}", r.id, cx.element, cx.detail)?,
            }
        }
        Ok(())
    }
}
