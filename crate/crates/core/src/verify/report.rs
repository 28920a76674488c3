use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Holds,
    Fails,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Holds => "HOLDS",
            Status::Fails => "FAILS",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Outcome of one claim. Everything except `runtime_ms` is a function of
/// the inputs and the seed.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub status: Status,
    pub parameters: Value,
    pub witnesses: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl ClaimReport {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn without_timing(mut self) -> Self {
        self.runtime_ms = None;
        self
    }

    /// The recorded counterexamples, if any.
    pub fn counterexamples(&self) -> Option<&Value> {
        self.witnesses.get("counterexamples")
    }
}

/// JSON array of reports; byte-identical for identical reports.
pub fn reports_to_json(reports: &[ClaimReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

const MAX_COUNTEREXAMPLES: usize = 5;

/// Accumulates the individual checks behind one claim.
pub(crate) struct Tally {
    id: String,
    started: Instant,
    checked: usize,
    skipped: usize,
    failures: Vec<Value>,
    failure_count: usize,
    notes: Map<String, Value>,
}

impl Tally {
    pub fn new(id: &str) -> Self {
        Tally {
            id: id.to_string(),
            started: Instant::now(),
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
            failure_count: 0,
            notes: Map::new(),
        }
    }

    /// Records one check; `counterexample` is only built on failure.
    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) -> bool {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_COUNTEREXAMPLES {
                self.failures.push(counterexample());
            }
        }
        ok
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn note(&mut self, key: &str, value: impl Serialize) {
        self.notes
            .insert(key.to_string(), serde_json::to_value(value).expect("note serializes"));
    }

    pub fn finish(self, parameters: Value) -> ClaimReport {
        let status = if self.failure_count > 0 {
            Status::Fails
        } else if self.checked == 0 {
            Status::Skipped
        } else {
            Status::Holds
        };
        let mut witnesses = self.notes;
        witnesses.insert("checked".into(), json!(self.checked));
        witnesses.insert("skipped".into(), json!(self.skipped));
        if self.failure_count > 0 {
            witnesses.insert("failures".into(), json!(self.failure_count));
            witnesses.insert("counterexamples".into(), Value::Array(self.failures));
        }
        ClaimReport {
            claim_id: self.id,
            status,
            parameters,
            witnesses: Value::Object(witnesses),
            runtime_ms: Some(self.started.elapsed().as_millis() as u64),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_the_checks() {
        let mut t = Tally::new("x");
        t.skip();
        assert_eq!(t.finish(json!({})).status, Status::Skipped);
        let mut t = Tally::new("x");
        t.check(true, || json!(null));
        assert_eq!(t.finish(json!({})).status, Status::Holds);
        let mut t = Tally::new("x");
        t.check(true, || json!(null));
        t.check(false, || json!({"v": 3}));
        let r = t.finish(json!({}));
        assert_eq!(r.status, Status::Fails);
        assert_eq!(r.counterexamples().unwrap(), &json!([{"v": 3}]));
    }

    #[test]
    fn timing_is_optional_in_json() {
        let mut t = Tally::new("x");
        t.check(true, || json!(null));
        let r = t.finish(json!({"n": 3})).without_timing();
        let text = reports_to_json(&[r]);
        assert!(!text.contains("runtime_ms"));
        assert!(text.contains("\"HOLDS\""));
    }
}
