//! Printed steps `S_ω φ_m = ...` closed against the recorded actions, and a
//! sweep over every stored `φ_m` and every recorded `ω`.

use super::{Item, SuiteContext, Verdict};
use crate::projection::{verify_all, verify_steps, ProjectionReport, StepOutcome};

fn item(prefix: &str, r: &ProjectionReport, locus: String) -> Item {
    let verdict = match r.verdict {
        StepOutcome::Pass => Verdict::Pass,
        StepOutcome::Fail => Verdict::Fail,
        StepOutcome::Insufficient => Verdict::Insufficient,
    };
    let witness = match r.verdict {
        StepOutcome::Insufficient => format!("missing {}", r.missing.join(", ")),
        StepOutcome::Fail => format!("difference {}", r.diff),
        StepOutcome::Pass => {
            let mut w = match r.mode {
                Some(m) => format!("{m:?}").to_lowercase(),
                None => String::new(),
            };
            if let Some(v) = &r.variant {
                w.push_str(&format!("; closed by alternate {v}"));
            }
            w
        }
    };
    Item::new(format!("{prefix} {}", r.id()), locus, verdict, witness)
}

pub fn suite_projections(ctx: &SuiteContext) -> Vec<Item> {
    let mut items: Vec<Item> = verify_steps(&ctx.db, &ctx.cx)
        .iter()
        .map(|r| item("step", r, r.source.clone()))
        .collect();
    items.extend(
        verify_all(&ctx.db, &ctx.cx)
            .iter()
            .map(|r| item("sweep", r, "projection of S_omega Phi_m".to_string())),
    );
    items
}
