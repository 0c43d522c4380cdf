// SPDX-License-Identifier: Apache-2.0

//! One function per subcommand, each producing a [`Report`].

use std::time::Instant;

use actions::{dade_check, ActionError};
use algebra::{grading_restriction_check, induced_external, induced_grading, smash_ring_iso, Field, SemigroupRing};
use constructions::{
    covering_iso, iso_smash_stable_eps, smash_report, stable_rees_build, stable_rees_report, verify_shift, Smash,
};
use gis::{natural_grading_verdicts, strong_mod_n_verdict, GisBackend};
use grade_group::{GradeGroup, GroupElement};
use grading::{check_grading, is_strongly_graded, Bounds, FiniteGraded, Verdict};
use graphs::{condition_y, locally_strong_condition, lpa_strongly_graded_verdict, structural_report, YMode};
use semigroup_core::Semigroup;
use serde_json::{json, Value};

use crate::acceptance;
use crate::input::{digest, parse_graded, parse_graph, parse_group, Input};
use crate::report::{decided, Check, Report};
use crate::{InputError, Options};

/// Bounded condition (Y) parameters shown next to the exact decision.
const Y_N_MAX: usize = 6;
const Y_K_MAX: usize = 12;
/// Largest smash product whose multiplication table is written out.
const TABLE_LIMIT: usize = 64;

fn load(opts: &Options) -> Result<Input, InputError> {
    let path = opts.input.as_deref().ok_or_else(|| InputError("this command needs --input FILE".into()))?;
    Input::read(path)
}

fn group_flag(opts: &Options) -> Result<Option<GradeGroup>, InputError> {
    opts.group.as_deref().map(parse_group).transpose()
}

fn details(x: &impl serde::Serialize) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

pub fn graph_analyze(opts: &Options) -> Result<Report, InputError> {
    let input = load(opts)?;
    let group = group_flag(opts)?;
    let (g, weights) = parse_graph(&input.json, group.as_ref())?;
    let structure = structural_report(&g);
    let mut report = Report::new("graph-analyze", input.digest, opts.parameters());
    report.check("condition_y", || {
        let bounded = condition_y(&g, YMode::Bounded { n_max: Y_N_MAX, k_max: Y_K_MAX });
        (condition_y(&g, YMode::Exact), json!({ "bounded": bounded }))
    });
    report.check("locally_strong_z", || (locally_strong_condition(&g), Value::Null));
    report.check("lpa_strongly_graded", || {
        (lpa_strongly_graded_verdict(&g), json!({ "structure": details(&structure) }))
    });
    report.check("weights", || {
        let w: Vec<String> = weights.as_slice().iter().map(ToString::to_string).collect();
        (
            Verdict::holds(format!("weights into {}", weights.group)),
            json!({ "edges": g.to_json()["edges"], "weights": w }),
        )
    });
    Ok(report)
}

pub fn gis_verdicts(opts: &Options) -> Result<Report, InputError> {
    let input = load(opts)?;
    let (g, _) = parse_graph(&input.json, None)?;
    let backend = GisBackend::new(g);
    let bounds = opts.bounds();
    let mut report = Report::new("gis-verdicts", input.digest, opts.parameters());
    match opts.modulus {
        Some(n) => {
            let started = Instant::now();
            let (verdict, cross) =
                strong_mod_n_verdict(&backend, n, bounds).map_err(|e| InputError(format!("--mod {n}: {e}")))?;
            report.record(format!("strong_mod_{n}"), started, verdict, Value::Null);
            report.check("cross_checks", || cross_check_verdict(&details(&cross), cross.iter().all(|c| c.consistent)));
        }
        None => {
            // The suite is computed in one pass; each verdict carries its total time.
            let started = Instant::now();
            let v = natural_grading_verdicts(&backend, &[], bounds).map_err(|e| InputError(e.to_string()))?;
            let (cross, consistent) = cross_check_verdict(&details(&v.cross_checks), v.consistent());
            report.record("strong_z", started, v.strong_z, Value::Null);
            report.record("locally_strong_z", started, v.locally_strong_z, Value::Null);
            report.record("saturated_z", started, v.saturated_z, Value::Null);
            report.record("cohn_strong_z", started, v.cohn_strong, Value::Null);
            report.record("cross_checks", started, cross, consistent);
        }
    }
    Ok(report)
}

fn cross_check_verdict(cross: &Value, consistent: bool) -> (Verdict, Value) {
    let verdict = decided(
        consistent,
        "theorem verdicts agree with the generic bounded checks",
        "a generic bounded check contradicts a theorem verdict",
        vec![],
    );
    (verdict, cross.clone())
}

pub fn smash_table(opts: &Options) -> Result<Report, InputError> {
    let input = load(opts)?;
    let gs = parse_graded(&input.json, group_flag(opts)?.as_ref())?;
    let level_bound = opts.bound.unwrap_or(1);
    let bounds = opts.bounds();
    let mut report = Report::new("smash-table", input.digest, opts.parameters());
    let smash = Smash::new(gs.clone(), level_bound);

    report.check("smash_transfers", || {
        let r = smash_report(&smash, bounds.element_bound);
        let ok = r.idempotents_match && r.transfers();
        let v = decided(
            ok,
            "E(S#Γ) = {eP_α}, and local units and inverses transfer between S and S#Γ",
            "a structural property of S does not transfer to S#Γ",
            vec![],
        );
        (v, json!({ "report": details(&r), "table": smash_cayley_table(&smash) }))
    });
    report.check("smash_shifts", || {
        let parts = smash
            .levels()
            .iter()
            .map(|a| (format!("shift by {a}"), verify_shift(&smash, a, bounds.element_bound)))
            .collect();
        (Verdict::all("every shift sP_α ↦ sP_{αβ} is a graded automorphism", parts), Value::Null)
    });
    report.check("stable_rees_strong", || match stable_rees_build(&gs, level_bound, 0) {
        Ok(sr) => {
            let r = stable_rees_report(&sr, bounds);
            (r.strongly_graded.clone(), details(&r))
        }
        Err(e) => (Verdict::fails(format!("S_Γ could not be built: {e}"), vec![]), Value::Null),
    });
    // The identification of S#Γ with (S_Γ)_ε requires local units.
    if let Ok(iso) = iso_smash_stable_eps(&gs, level_bound, 0) {
        report.check("smash_stable_iso", || (iso.verdict.clone(), details(&iso)));
    }
    Ok(report)
}

fn smash_cayley_table(smash: &Smash<FiniteGraded>) -> Value {
    let elems = smash.enumerate(0);
    if elems.len() > TABLE_LIMIT {
        return json!({ "omitted": format!("{} elements exceed the table limit {TABLE_LIMIT}", elems.len()) });
    }
    let labels: Vec<String> = elems.iter().map(|a| smash.render(a)).collect();
    let rows: Vec<Vec<String>> =
        elems.iter().map(|a| elems.iter().map(|b| smash.render(&smash.mul(a, b))).collect()).collect();
    json!({ "elements": labels, "rows": rows })
}

pub fn cover_iso(opts: &Options) -> Result<Report, InputError> {
    let input = load(opts)?;
    let group = group_flag(opts)?.unwrap_or(GradeGroup::Integers);
    let (g, weights) = parse_graph(&input.json, Some(&group))?;
    let window = window(&group, opts.window.unwrap_or(5));
    let size_bound = opts.bound.unwrap_or(6);
    let mut report = Report::new("cover-iso", input.digest, opts.parameters());
    let started = Instant::now();
    let r = covering_iso(&g, &weights, &window, size_bound).map_err(|e| InputError(e.to_string()))?;
    report.record("covering_iso", started, r.verdict.clone(), details(&r));
    Ok(report)
}

/// All of a finite group, or the integers `-k..=k` of an infinite one.
pub fn window(group: &GradeGroup, k: usize) -> Vec<GroupElement> {
    if group.is_finite() {
        group.enumerate(0)
    } else {
        group.enumerate(k)
    }
}

pub fn ring_checks(opts: &Options) -> Result<Report, InputError> {
    let input = load(opts)?;
    let gs = parse_graded(&input.json, group_flag(opts)?.as_ref())?;
    let fields = match opts.modulus {
        Some(p) => vec![Field::prime(p).map_err(|e| InputError(format!("--mod {p}: {e}")))?],
        None => vec![Field::Rational, Field::prime(2).expect("2 is prime")],
    };
    let level_bound = opts.bound.unwrap_or(1);
    let mut report = Report::new("ring-checks", input.digest, opts.parameters());
    for field in fields {
        let tag = field_tag(&field);
        let induced = induced_grading(&gs, field).map_err(|e| InputError(e.to_string()))?;
        report.check(format!("strong_equivalence_{tag}"), || {
            let v = decided(
                induced.agree,
                format!("S and {field}[S] are both {}", strong_word(&induced.ring_strong)),
                "the semigroup and ring verdicts on strong grading differ",
                vec![induced.semigroup_strong.to_string(), induced.ring_strong.to_string()],
            );
            (v, details(&induced))
        });
        report.check(format!("smash_ring_iso_{tag}"), || {
            let r = smash_ring_iso(&gs, field, level_bound);
            let v = decided(
                r.ok(),
                format!("{field}[S#Γ] ≅ {field}[S]#Γ on the basis"),
                "φ fails on a basis pair",
                r.failures.clone(),
            );
            (v, details(&r))
        });
        report.check(format!("induced_restriction_{tag}"), || {
            let ring = SemigroupRing::new(&gs.sg, field);
            (grading_restriction_check(&ring, &induced_external(&gs, field)), Value::Null)
        });
    }
    Ok(report)
}

fn field_tag(field: &Field) -> String {
    match field {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("F{p}"),
    }
}

fn strong_word(v: &Verdict) -> &'static str {
    if v.is_holds() {
        "strongly graded"
    } else {
        "not strongly graded"
    }
}

pub fn dade(opts: &Options) -> Result<Report, InputError> {
    let input = load(opts)?;
    let gs = parse_graded(&input.json, group_flag(opts)?.as_ref())?;
    let family_bound = opts.bound.unwrap_or(4);
    let mut report = Report::new("dade", input.digest, opts.parameters());
    let started = Instant::now();
    let r = dade_check(&gs, family_bound).map_err(|e: ActionError| InputError(format!("dade: {e}")))?;
    report.record("dade_nu_bijective", started, r.verdict.clone(), details(&r));
    report.check("dade_agrees_with_strong", || {
        let strong = is_strongly_graded(&gs, Bounds::default());
        let v = decided(
            r.agrees_with_strong,
            format!("every ν_X is bijective exactly when S is {}", strong_word(&strong)),
            "the ν_X proxy disagrees with the strong-grading verdict",
            vec![strong.to_string()],
        );
        (v, Value::Null)
    });
    report.check("grading", || (check_grading(&gs, 0), Value::Null));
    Ok(report)
}

pub fn selftest(opts: &Options) -> Result<Report, InputError> {
    let mut report = Report::new("selftest", digest(b""), opts.parameters());
    for outcome in acceptance::run_all() {
        let verdict = decided(outcome.passed(), outcome.detail.clone(), outcome.detail.clone(), vec![]);
        report.push(Check {
            name: format!("criterion_{:02}_{}", outcome.id, outcome.name),
            verdict,
            details: json!({ "limit_s": outcome.limit.as_secs() }),
            wall_time: outcome.elapsed,
        });
    }
    Ok(report)
}
