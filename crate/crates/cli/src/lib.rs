// SPDX-License-Identifier: Apache-2.0

//! Front end for the verdict suites: input loading, subcommands, reports and
//! the acceptance suite behind `selftest`.

pub mod acceptance;
pub mod commands;
pub mod input;
pub mod report;

use std::path::PathBuf;

use grading::Bounds;
use serde_json::{json, Value};

pub use report::{Check, Report};

/// A rejected input; the binary exits with code 3.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("input error: {0}")]
pub struct InputError(pub String);

pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    GraphAnalyze,
    GisVerdicts,
    SmashTable,
    CoverIso,
    RingChecks,
    Dade,
    Selftest,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::GraphAnalyze => "graph-analyze",
            Command::GisVerdicts => "gis-verdicts",
            Command::SmashTable => "smash-table",
            Command::CoverIso => "cover-iso",
            Command::RingChecks => "ring-checks",
            Command::Dade => "dade",
            Command::Selftest => "selftest",
        }
    }
}

/// Flags shared by all subcommands; each command reads the ones it needs.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub input: Option<PathBuf>,
    pub group: Option<String>,
    pub bound: Option<usize>,
    pub window: Option<usize>,
    pub modulus: Option<u64>,
}

impl Options {
    /// Verdict bounds with `--bound` as the element bound.
    pub fn bounds(&self) -> Bounds {
        let mut b = Bounds::default();
        if let Some(n) = self.bound {
            b.element_bound = n;
        }
        b
    }

    /// The flags that influence results, recorded in the report body. The
    /// input path is left out: the digest identifies the input.
    pub fn parameters(&self) -> Value {
        json!({
            "group": self.group,
            "bound": self.bound,
            "window": self.window,
            "mod": self.modulus,
        })
    }
}

pub fn run(command: Command, opts: &Options) -> Result<Report, InputError> {
    match command {
        Command::GraphAnalyze => commands::graph_analyze(opts),
        Command::GisVerdicts => commands::gis_verdicts(opts),
        Command::SmashTable => commands::smash_table(opts),
        Command::CoverIso => commands::cover_iso(opts),
        Command::RingChecks => commands::ring_checks(opts),
        Command::Dade => commands::dade(opts),
        Command::Selftest => commands::selftest(opts),
    }
}
