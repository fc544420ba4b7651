//! Closing the loop: `S_ω φ_m`, evaluated from the records, against the
//! projection of `S_ω Φ_m`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::cartan::project_s_on_phi;
use super::{cartan_apply, Database, Step, Target};
use crate::algebra::Poly;
use crate::hopf::OpIndex;
use crate::mass::{Complex, RelationMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepOutcome {
    Pass,
    Fail,
    Insufficient,
}

/// Both equality notions for one comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionVerdict {
    pub identical: bool,
    pub up_to_boundary: bool,
}

/// One `(m, ω)` comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    pub m: u32,
    pub omega: String,
    pub verdict: StepOutcome,
    /// The strongest notion under which the equality holds.
    pub mode: Option<RelationMode>,
    pub diff: String,
    pub expected: String,
    /// Whether the expected value agrees with the Kochman expansion.
    pub kochman_agrees: Option<bool>,
    pub missing: Vec<String>,
    pub source: String,
    /// The alternate record that closes the step when the primary data do not.
    pub variant: Option<String>,
}

impl ProjectionReport {
    pub fn id(&self) -> String {
        format!("S_{{{}}} phi{}", self.omega, self.m)
    }
}

/// The projection of `S_ω Φ_m` in E₁.
pub fn expected_projection(m: u32, omega: &OpIndex, db: &Database) -> Result<Poly, Vec<String>> {
    project_s_on_phi(omega, m, db).map_err(|e| e.labels())
}

fn compare(
    m: u32,
    omega: &OpIndex,
    expected: Result<Poly, Vec<String>>,
    db: &Database,
    cx: &Complex,
    source: String,
) -> ProjectionReport {
    let mut report = ProjectionReport {
        m,
        omega: omega.to_string(),
        verdict: StepOutcome::Insufficient,
        mode: None,
        diff: String::new(),
        expected: String::new(),
        kochman_agrees: None,
        missing: Vec::new(),
        source,
        variant: None,
    };
    let Some(phi) = db.projection(m) else {
        report.missing.push(Target::Phi(m).to_string());
        return report;
    };
    let expected = match expected {
        Ok(e) => e,
        Err(missing) => {
            report.missing = missing;
            return report;
        }
    };
    report.expected = expected.to_string();
    let got = match cartan_apply(omega, phi, db) {
        Ok(v) => v,
        Err(e) => {
            report.missing = e.labels();
            return report;
        }
    };
    let diff = &got + &expected;
    report.diff = diff.to_string();
    let v = ProjectionVerdict {
        identical: diff.is_zero(),
        up_to_boundary: diff.is_zero() || cx.is_boundary(&diff).unwrap_or(false),
    };
    (report.verdict, report.mode) = if v.identical {
        (StepOutcome::Pass, Some(RelationMode::Identical))
    } else if v.up_to_boundary {
        (StepOutcome::Pass, Some(RelationMode::UpToBoundary))
    } else {
        (StepOutcome::Fail, None)
    };
    report
}

/// Retries a failing comparison with each alternate record in turn.
fn with_alternates(db: &Database, run: impl Fn(&Database) -> ProjectionReport) -> ProjectionReport {
    let r = run(db);
    if r.verdict != StepOutcome::Fail {
        return r;
    }
    for alt in db.alternates() {
        let mut r2 = run(&db.with_record(alt));
        if r2.verdict == StepOutcome::Pass {
            r2.variant = Some(format!("{} ({})", alt.text, alt.origin));
            r2.diff = r.diff;
            return r2;
        }
    }
    r
}

/// `S_ω φ_m` against the projection of `S_ω Φ_m`.
pub fn verify_projection(m: u32, omega: &OpIndex, db: &Database, cx: &Complex) -> ProjectionReport {
    with_alternates(db, |db| {
        let expected = expected_projection(m, omega, db);
        let mut r = compare(m, omega, expected, db, cx, "kochman".into());
        r.kochman_agrees = Some(true);
        r
    })
}

fn verify_step(step: &Step, db: &Database, cx: &Complex) -> ProjectionReport {
    with_alternates(db, |db| {
        let mut r = compare(
            step.m,
            &step.omega,
            Ok(step.expected.clone()),
            db,
            cx,
            step.origin.to_string(),
        );
        r.kochman_agrees = expected_projection(step.m, &step.omega, db)
            .ok()
            .map(|k| k == step.expected);
        r
    })
}

/// Every printed step, in file order.
pub fn verify_steps(db: &Database, cx: &Complex) -> Vec<ProjectionReport> {
    db.steps().par_iter().map(|s| verify_step(s, db, cx)).collect()
}

/// Every `(m, ω)` with `φ_m` stored and `ω` of positive weight occurring in a
/// record or a step, compared with the Kochman expansion.
pub fn verify_all(db: &Database, cx: &Complex) -> Vec<ProjectionReport> {
    let omegas: BTreeSet<OpIndex> = db
        .records()
        .map(|r| r.omega.clone())
        .chain(db.steps().iter().map(|s| s.omega.clone()))
        .filter(|w| !w.is_empty())
        .collect();
    let pairs: Vec<(u32, OpIndex)> = db
        .projections()
        .flat_map(|(m, _)| {
            omegas
                .iter()
                .filter(move |w| 4 * w.weight() <= 8 * m - 2)
                .map(move |w| (m, w.clone()))
        })
        .collect();
    pairs
        .par_iter()
        .map(|(m, w)| verify_projection(*m, w, db, cx))
        .collect()
}

/// Steps that fail after replacing one record's value, and the steps whose
/// evaluation uses that record at all.
pub fn fault_injection(
    db: &Database,
    cx: &Complex,
    target: Target,
    omega: &OpIndex,
    value: Poly,
) -> (Vec<String>, Vec<String>) {
    let base = verify_steps(db, cx);
    let bad = verify_steps(&db.with_record_value(target, omega, value), cx);
    let cut = verify_steps(&db.without_record(target, omega), cx);
    let failing = base
        .iter()
        .zip(&bad)
        .filter(|(a, b)| a.verdict == StepOutcome::Pass && b.verdict == StepOutcome::Fail)
        .map(|(_, b)| b.id())
        .collect();
    let dependent = base
        .iter()
        .zip(&cut)
        .filter(|(a, c)| {
            a.verdict != StepOutcome::Insufficient && c.verdict == StepOutcome::Insufficient
        })
        .map(|(_, c)| c.id())
        .collect();
    (failing, dependent)
}
