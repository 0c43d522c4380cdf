// SPDX-License-Identifier: Apache-2.0

//! Prints one PASS/FAIL line per acceptance criterion, then asserts all passed.

use cli::acceptance::{criteria, run_criterion};

#[test]
fn acceptance_suite() {
    let results: Vec<_> = criteria().iter().map(run_criterion).collect();
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.passed()).map(|r| r.line()).collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
