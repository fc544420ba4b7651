//! Closed forms for `S_{k,...,k} Φ_n` against the α/γ sums and the Kochman
//! expansion, and the α sum against the coefficient of `b_k^m` in `χ(B)`.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{Item, SuiteContext, Verdict};
use crate::binomial::{
    alpha_bruteforce, corollary_closed_form, s_repeated_phi, CoeffQuery, CorollaryError,
    ThreePartVariant, CLOSED_FORM_SHAPES,
};
use crate::hopf::{chi_component, s_on_phi, OpIndex};

/// The coefficient of `b_k^m` in `χ(B)^{2n-km}_{km}`.
pub fn chi_coefficient(n: u32, m: u32, k: u32) -> Option<BigInt> {
    let w = m * k;
    (w <= 2 * n).then(|| chi_component(2 * n - w, w).coefficient(&OpIndex::repeated(k, m)))
}

fn closed_form_item(m: u32, n: u32, k: u32) -> Item {
    let id = format!("closed-form m={m} n={n} k={k}");
    let locus = format!("corollary for {m} equal parts");
    let brute = s_repeated_phi(n, k, m);
    match corollary_closed_form(m, n, k, ThreePartVariant::Corrected) {
        Ok(cf) => {
            let v = cf.to_vector();
            let verdict = if v == brute { Verdict::Pass } else { Verdict::Fail };
            Item::new(id, locus, verdict, format!("closed {v}, sum {brute}"))
        }
        Err(CorollaryError::Hypothesis(h)) => {
            Item::new(id, locus, Verdict::NotApplicable, format!("hypothesis {h} fails"))
        }
        Err(e) => Item::new(id, locus, Verdict::Fail, e.to_string()),
    }
}

/// The θ₁ case with three parts under the printed hypothesis `2n + 1 = 3k`.
fn printed_three_part_item(n: u32, k: u32) -> Item {
    let id = format!("closed-form-printed m=3 n={n} k={k}");
    let locus = "corollary for 3 equal parts, theta case as printed";
    let brute = s_repeated_phi(n, k, 3);
    let cf = corollary_closed_form(3, n, k, ThreePartVariant::Printed)
        .expect("three parts always has a form")
        .to_vector();
    if cf == brute {
        Item::new(id, locus, Verdict::Pass, format!("closed {cf}, sum {brute}"))
    } else {
        Item::new(
            id,
            locus,
            Verdict::NotApplicable,
            format!("weight 3k = {} cannot reach theta1 from Phi{n}; closed {cf}, sum {brute}", 3 * k),
        )
    }
}

fn kochman_item(m: u32, n: u32, k: u32) -> Item {
    let id = format!("kochman m={m} n={n} k={k}");
    let brute = s_repeated_phi(n, k, m);
    let direct = s_on_phi(&OpIndex::repeated(k, m), n);
    let verdict = if brute == direct { Verdict::Pass } else { Verdict::Fail };
    Item::new(
        id,
        "coefficient sums against the Kochman expansion",
        verdict,
        format!("sum {brute}, expansion {direct}"),
    )
}

fn chi_item(n: u32, m: u32, k: u32) -> Item {
    let id = format!("chi n={n} m={m} k={k}");
    let locus = "alpha sum as a coefficient of chi(B)";
    let alpha = alpha_bruteforce(CoeffQuery::new(n, m, k));
    match (alpha, chi_coefficient(n, m, k)) {
        (Ok(a), Some(c)) => {
            let verdict = if a == c { Verdict::Pass } else { Verdict::Fail };
            Item::new(id, locus, verdict, format!("alpha {a}, chi {c}"))
        }
        (Err(e), _) => Item::new(id, locus, Verdict::NotApplicable, e.to_string()),
        (_, None) => Item::new(id, locus, Verdict::NotApplicable, "weight exceeds 2n"),
    }
}

pub fn suite_corollaries(ctx: &SuiteContext) -> Vec<Item> {
    let b = &ctx.bounds;
    let mut jobs: Vec<Box<dyn Fn() -> Item + Send + Sync>> = Vec::new();
    for m in CLOSED_FORM_SHAPES.filter(|&m| m <= b.m_max) {
        for n in 1..=b.n_max {
            for k in 1..=b.k_max {
                jobs.push(Box::new(move || closed_form_item(m, n, k)));
            }
        }
    }
    for n in 1..=b.n_max {
        for k in 1..=b.k_max {
            if 2 * n + 1 == 3 * k {
                jobs.push(Box::new(move || printed_three_part_item(n, k)));
            }
        }
    }
    for m in 1..=b.m_max {
        for n in 1..=b.n_max {
            for k in 1..=b.k_max {
                jobs.push(Box::new(move || kochman_item(m, n, k)));
            }
        }
    }
    for n in 1..=10 {
        for m in 1..=12u32 {
            for k in (1..=12 / m).filter(|k| m * k % 2 == 0 && m * k < 2 * n) {
                jobs.push(Box::new(move || chi_item(n, m, k)));
            }
        }
    }
    jobs.par_iter().map(|f| f()).collect()
}
