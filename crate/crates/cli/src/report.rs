// SPDX-License-Identifier: Apache-2.0

//! Run reports. The body (everything but wall times) is deterministic for a
//! fixed input and fixed flags; its SHA-256 is carried alongside it.

use std::time::{Duration, Instant};

use grading::{Status, Verdict};
use serde_json::{json, Map, Value};

use crate::input::digest;

pub const ARTIFACT: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    /// Check-specific structured data; must itself be deterministic.
    pub details: Value,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub parameters: Value,
    checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, input_digest: String, parameters: Value) -> Self {
        Self { command: command.into(), input_digest, parameters, checks: Vec::new() }
    }

    /// Runs `f`, timing it, and records the result under `name`.
    pub fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> (Verdict, Value)) {
        let start = Instant::now();
        let (verdict, details) = f();
        self.push(Check { name: name.into(), verdict, details, wall_time: start.elapsed() });
    }

    /// Records a result computed since `started`.
    pub fn record(&mut self, name: impl Into<String>, started: Instant, verdict: Verdict, details: Value) {
        self.push(Check { name: name.into(), verdict, details, wall_time: started.elapsed() });
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// 1 if anything Fails, else 2 if anything is Unknown, else 0.
    pub fn exit_code(&self) -> i32 {
        let has = |s: Status| self.checks.iter().any(|c| c.verdict.status == s);
        if has(Status::Fails) {
            1
        } else if has(Status::Unknown) {
            2
        } else {
            0
        }
    }

    pub fn body(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = serde_json::to_value(&c.verdict).expect("verdicts serialize");
                v["name"] = json!(c.name);
                if !c.details.is_null() {
                    v["details"] = c.details.clone();
                }
                v
            })
            .collect();
        json!({
            "artifact": ARTIFACT,
            "version": VERSION,
            "command": self.command,
            "input_digest": self.input_digest,
            "parameters": self.parameters,
            "checks": checks,
        })
    }

    pub fn body_digest(&self) -> String {
        digest(&serde_json::to_vec(&self.body()).expect("JSON serializes"))
    }

    /// The body, its digest, and optionally the wall times (outside the digest).
    pub fn to_json(&self, with_timings: bool) -> Value {
        let mut v = self.body();
        v["body_digest"] = json!(self.body_digest());
        if with_timings {
            let times: Map<String, Value> =
                self.checks.iter().map(|c| (c.name.clone(), json!(c.wall_time.as_secs_f64() * 1e3))).collect();
            v["wall_time_ms"] = Value::Object(times);
        }
        v
    }

    /// One line per check: status, name, wall time, certificate.
    pub fn summary(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let mut line = format!(
                    "{:<7} {} ({:.1} ms): {}",
                    format!("{:?}", c.verdict.status),
                    c.name,
                    c.wall_time.as_secs_f64() * 1e3,
                    c.verdict.certificate
                );
                if !c.verdict.witness.is_empty() {
                    line.push_str(&format!(" [witness: {}]", c.verdict.witness.join(", ")));
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// A Holds/Fails verdict for a yes/no property.
pub fn decided(ok: bool, holds: impl Into<String>, fails: impl Into<String>, witness: Vec<String>) -> Verdict {
    if ok {
        Verdict::holds(holds)
    } else {
        Verdict::fails(fails, witness)
    }
}
