// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cli::{run, Command, Options, EXIT_INPUT_ERROR};

/// Verdict suites for graded semigroups, graph inverse semigroups and their rings.
#[derive(Parser)]
#[command(version, about)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    /// Input JSON file (graph or graded semigroup, depending on the command).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Grading group: Z, Z/n, trivial, or a group JSON object.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Element, size, level or family bound, depending on the command.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Window radius for infinite grading groups.
    #[arg(long, global = true)]
    window: Option<usize>,
    /// Write the JSON report to PATH, or to standard output for `-`.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Modulus for ℤ/n verdicts, or the prime for ring checks.
    #[arg(long = "mod", global = true, value_name = "N")]
    modulus: Option<u64>,
    /// Include per-check wall times in the JSON report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Structural, condition (Y) and Leavitt path algebra verdicts of a graph.
    GraphAnalyze,
    /// Grading verdicts for the graph inverse semigroup of a graph.
    GisVerdicts,
    /// Smash product table and the stable Rees comparison.
    SmashTable,
    /// Covering-graph isomorphism against the smash product.
    CoverIso,
    /// Semigroup-ring checks over Q and F_2 (or F_p with --mod p).
    RingChecks,
    /// The ν_X proxy for the Dade equivalence.
    Dade,
    /// Run the acceptance suite.
    Selftest,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::GraphAnalyze => Command::GraphAnalyze,
            Cmd::GisVerdicts => Command::GisVerdicts,
            Cmd::SmashTable => Command::SmashTable,
            Cmd::CoverIso => Command::CoverIso,
            Cmd::RingChecks => Command::RingChecks,
            Cmd::Dade => Command::Dade,
            Cmd::Selftest => Command::Selftest,
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts =
        Options { input: args.input, group: args.group, bound: args.bound, window: args.window, modulus: args.modulus };
    let report = match run(args.command.into(), &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_INPUT_ERROR as u8);
        }
    };
    let text = serde_json::to_string_pretty(&report.to_json(args.timings)).expect("JSON serializes");
    match args.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => println!("{text}"),
        Some(p) => {
            if let Err(e) = std::fs::write(p, text + "\n") {
                eprintln!("cannot write {}: {e}", p.display());
                return ExitCode::from(EXIT_INPUT_ERROR as u8);
            }
            println!("{}", report.summary());
        }
        None => println!("{}", report.summary()),
    }
    // With the report on stdout, the summary (and wall times) go to stderr.
    if matches!(args.json.as_deref(), Some(p) if p.as_os_str() == "-") {
        let _ = writeln!(std::io::stderr(), "{}", report.summary());
    }
    ExitCode::from(report.exit_code() as u8)
}
