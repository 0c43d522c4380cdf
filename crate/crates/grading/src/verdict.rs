// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

/// Tri-state answer to a yes/no question about a (possibly infinite) object.
///
/// `exact` is false when a `Holds` only covers an enumerated fragment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub certificate: String,
    pub witness: Vec<String>,
    pub bounds: BTreeMap<String, u64>,
    pub exact: bool,
}

impl Verdict {
    pub fn holds(certificate: impl Into<String>) -> Self {
        Self {
            status: Status::Holds,
            certificate: certificate.into(),
            witness: vec![],
            bounds: BTreeMap::new(),
            exact: true,
        }
    }

    pub fn fails(certificate: impl Into<String>, witness: Vec<String>) -> Self {
        Self { status: Status::Fails, certificate: certificate.into(), witness, bounds: BTreeMap::new(), exact: true }
    }

    pub fn unknown(certificate: impl Into<String>) -> Self {
        Self {
            status: Status::Unknown,
            certificate: certificate.into(),
            witness: vec![],
            bounds: BTreeMap::new(),
            exact: false,
        }
    }

    pub fn with_bound(mut self, name: &str, value: usize) -> Self {
        self.bounds.insert(name.to_string(), value as u64);
        self
    }

    pub fn with_witness(mut self, witness: Vec<String>) -> Self {
        self.witness = witness;
        self
    }

    /// Marks a `Holds` as covering only an enumerated fragment.
    pub fn fragment(mut self) -> Self {
        self.exact = false;
        self
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }

    /// Conjunction of named sub-verdicts: any failure wins, then any unknown.
    pub fn all(certificate: &str, parts: Vec<(String, Verdict)>) -> Verdict {
        let mut out = Verdict::holds(certificate);
        let mut exact = true;
        for (name, v) in &parts {
            exact &= v.exact;
            for (k, b) in &v.bounds {
                out.bounds.entry(k.clone()).or_insert(*b);
            }
            match v.status {
                Status::Fails if out.status != Status::Fails => {
                    out.status = Status::Fails;
                    out.certificate = format!("{certificate}: {name} fails ({})", v.certificate);
                    out.witness = v.witness.clone();
                }
                Status::Unknown if out.status == Status::Holds => {
                    out.status = Status::Unknown;
                    out.certificate = format!("{certificate}: {name} unknown ({})", v.certificate);
                }
                _ => {}
            }
        }
        out.exact = out.status == Status::Fails || exact;
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.status)?;
        if !self.exact && self.status == Status::Holds {
            write!(f, " (fragment)")?;
        }
        write!(f, ": {}", self.certificate)?;
        if !self.witness.is_empty() {
            write!(f, " [witness: {}]", self.witness.join(", "))?;
        }
        Ok(())
    }
}
