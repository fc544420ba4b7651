//! Table 9: the action of Landweber-Novikov operations on Ray's elements.
//!
//! Single-index rows are read two ways: literally as `S_(k)`, and with the
//! index counting `b_{2k}`, i.e. as `S_(2k)`. A row passes when either
//! reading reproduces it.

use rayon::prelude::*;

use super::{Item, SuiteContext, Verdict};
use crate::hopf::{s_on_phi, OpIndex};
use crate::phi::{PhiSymbol, PhiVector};

/// An explicit row `S_{k,...,k} Φ_m = Φ_target` with `reps` parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table9Row {
    pub m: u32,
    pub k: u32,
    pub reps: u32,
    pub target: u32,
}

const fn row(m: u32, k: u32, reps: u32, target: u32) -> Table9Row {
    Table9Row { m, k, reps, target }
}

/// The explicit rows, as printed.
pub const TABLE9_ROWS: &[Table9Row] = &[
    row(5, 2, 4, 1),
    row(6, 2, 4, 2),
    row(6, 2, 5, 1),
    row(8, 3, 4, 2),
    row(9, 2, 4, 5),
    row(9, 2, 5, 4),
    row(9, 2, 6, 3),
    row(9, 3, 4, 3),
    row(9, 2, 7, 2),
    row(9, 4, 4, 1),
    row(9, 2, 8, 1),
    row(10, 2, 4, 6),
    row(10, 2, 5, 5),
    row(10, 4, 4, 2),
    row(10, 2, 8, 2),
    row(10, 2, 9, 1),
    row(11, 2, 8, 3),
    row(11, 2, 9, 2),
    row(12, 3, 4, 6),
    row(12, 2, 8, 4),
    row(12, 5, 4, 2),
    row(12, 3, 6, 3),
    row(12, 2, 9, 3),
    row(13, 2, 4, 9),
    row(13, 2, 5, 8),
    row(13, 2, 6, 7),
    row(13, 3, 4, 7),
    row(13, 2, 7, 6),
    row(13, 4, 4, 5),
    row(13, 5, 4, 3),
    row(13, 4, 5, 3),
    row(13, 6, 4, 1),
    row(13, 4, 6, 1),
    row(14, 2, 4, 2),
    row(14, 2, 5, 9),
    row(14, 4, 4, 6),
    row(14, 4, 5, 4),
    row(14, 6, 4, 2),
];

fn phi_or_zero(coefficient: bool, target: u32) -> PhiVector {
    if coefficient {
        PhiVector::single(PhiSymbol::phi(target))
    } else {
        PhiVector::zero()
    }
}

fn label(omega: &OpIndex, m: u32, expected: &PhiVector) -> String {
    format!("S_{{{omega}}} Phi{m} = {expected}")
}

fn compare(id: String, locus: &str, omega: &OpIndex, m: u32, expected: &PhiVector) -> Item {
    let got = s_on_phi(omega, m);
    let verdict = if &got == expected { Verdict::Pass } else { Verdict::Fail };
    Item::new(id, locus, verdict, format!("computed {got}"))
}

fn explicit_items(r: Table9Row) -> Vec<Item> {
    let omega = OpIndex::repeated(r.k, r.reps);
    let w = omega.weight();
    let printed = PhiVector::single(PhiSymbol::phi(r.target));
    let id = label(&omega, r.m, &printed);
    let locus = format!("Table 9, row Phi{}", r.m);
    if w % 2 == 1 || w / 2 + r.target != r.m {
        let right = r.m.saturating_sub(w / 2);
        let corrected = PhiVector::single(PhiSymbol::phi(right));
        let got = s_on_phi(&omega, r.m);
        return vec![
            Item::new(
                id,
                &locus,
                Verdict::NotApplicable,
                format!("weight {w} maps Phi{} to Phi{right}; printed target has the wrong degree", r.m),
            ),
            Item::new(
                format!("{} (degree-corrected)", label(&omega, r.m, &corrected)),
                &locus,
                if got == corrected { Verdict::Pass } else { Verdict::Fail },
                format!("computed {got}"),
            ),
        ];
    }
    vec![compare(id, &locus, &omega, r.m, &printed)]
}

/// A single-index row under both readings.
fn single_index_item(m: u32, k: u32, expected: PhiVector, locus: &str) -> Item {
    let literal = OpIndex::single(k);
    let doubled = OpIndex::single(2 * k);
    let a = s_on_phi(&literal, m);
    let b = s_on_phi(&doubled, m);
    let id = format!("S_{{{k}}} Phi{m} = {expected}");
    let witness = format!("literal S_{{{k}}}: {a}; as b_{{2k}}, S_{{{}}}: {b}", 2 * k);
    let verdict = if a == expected || b == expected {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Item::new(id, locus, verdict, witness)
}

pub fn suite_table9(ctx: &SuiteContext) -> Vec<Item> {
    let top = ctx.bounds.family_m_max;
    let mut jobs: Vec<Box<dyn Fn() -> Vec<Item> + Send + Sync>> = Vec::new();
    for &r in TABLE9_ROWS {
        jobs.push(Box::new(move || explicit_items(r)));
    }
    for m in 1..=top {
        for k in 1..m {
            jobs.push(Box::new(move || {
                let e = PhiVector::single(PhiSymbol::phi(m - k));
                vec![single_index_item(m, k, e, "Table 9, family S_k Phi_m")]
            }));
        }
        jobs.push(Box::new(move || {
            let e = PhiVector::single(PhiSymbol::Theta1);
            vec![single_index_item(m, 2 * m - 1, e, "Table 9, family S_{2m-1} Phi_m")]
        }));
        for k in 1..m {
            jobs.push(Box::new(move || {
                let omega = OpIndex::repeated(k, 2);
                let e = phi_or_zero((m - k) % 2 == 1, m - k);
                vec![compare(
                    label(&omega, m, &e),
                    "Table 9, family S_{k,k} Phi_m",
                    &omega,
                    m,
                    &e,
                )]
            }));
        }
        for s in (1..).take_while(|s| 3 * s < m) {
            jobs.push(Box::new(move || {
                let k = 2 * s;
                let omega = OpIndex::repeated(k, 3);
                let e = phi_or_zero((m - k) % 2 == 1, m - 3 * s);
                vec![compare(
                    label(&omega, m, &e),
                    "Table 9, family S_{k,k,k} Phi_m",
                    &omega,
                    m,
                    &e,
                )]
            }));
        }
    }
    jobs.par_iter().flat_map_iter(|f| f()).collect()
}
