//! `d₁² = 0` sweeps and the printed generators of the E₂ cells.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Item, SuiteContext, Verdict};
use crate::algebra::{c, h, u, Gen, Monomial, Poly, TriDegree};
use crate::mass::massey::{phi_triple, witness_u1_omega, witness_u_phi, MasseyContext, MasseyError};
use crate::mass::{d1, d1_monomial, Complex, Registry};

/// Every monomial of `t ≤ t_max` over the generators of positive `t`,
/// times `h₀^a` for `a ≤ 1`.
fn monomials_up_to(registry: &Registry, t_max: u32) -> Vec<Monomial> {
    let gens: Vec<Gen> = registry
        .generators()
        .iter()
        .copied()
        .filter(|g| g.degree().t > 0 && g.degree().t <= t_max)
        .collect();
    let mut out = Vec::new();
    fn walk(gens: &[Gen], from: usize, left: u32, cur: &mut Vec<(Gen, u32)>, out: &mut Vec<Monomial>) {
        out.push(Monomial::from_factors(cur.iter().copied()));
        for i in from..gens.len() {
            let t = gens[i].degree().t;
            if t > left {
                continue;
            }
            cur.push((gens[i], 1));
            walk(gens, i, left - t, cur, out);
            cur.pop();
        }
    }
    walk(&gens, 0, t_max, &mut Vec::new(), &mut out);
    let h0 = Monomial::gen(Gen::H0);
    let with_h0: Vec<Monomial> = out.iter().map(|m| m.mul(&h0)).collect();
    out.extend(with_h0);
    out
}

/// Per `t`: the number of monomials checked and those with `d₁² ≠ 0`.
pub fn d1_squared_exhaustive(registry: &Registry, t_max: u32) -> BTreeMap<u32, (usize, Vec<Monomial>)> {
    let all = monomials_up_to(registry, t_max);
    let bad: Vec<Option<Monomial>> = all
        .par_iter()
        .map(|m| (!d1(&d1_monomial(m)).is_zero()).then(|| m.clone()))
        .collect();
    let mut out: BTreeMap<u32, (usize, Vec<Monomial>)> = BTreeMap::new();
    for (m, b) in all.iter().zip(bad) {
        let e = out.entry(m.degree().t).or_default();
        e.0 += 1;
        e.1.extend(b);
    }
    out
}

fn random_monomial(rng: &mut ChaCha8Rng, gens: &[Gen], t: u32) -> Option<Monomial> {
    let mut left = t;
    let mut factors = Vec::new();
    while left > 0 {
        let fits: Vec<Gen> = gens.iter().copied().filter(|g| g.degree().t <= left).collect();
        if fits.is_empty() {
            return None;
        }
        let g = fits[rng.gen_range(0..fits.len())];
        left -= g.degree().t;
        factors.push((g, 1));
    }
    if rng.gen_bool(0.5) {
        factors.push((Gen::H0, 1));
    }
    Some(Monomial::from_factors(factors))
}

/// `samples` random monomials with `t_min < t ≤ t_max`; returns those with `d₁² ≠ 0`.
pub fn d1_squared_random(
    registry: &Registry,
    t_min: u32,
    t_max: u32,
    samples: usize,
    seed: u64,
) -> Vec<Monomial> {
    let gens: Vec<Gen> = registry
        .generators()
        .iter()
        .copied()
        .filter(|g| g.degree().t > 0)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = Vec::with_capacity(samples);
    while picked.len() < samples {
        let t = 2 * rng.gen_range(t_min / 2 + 1..=t_max / 2);
        if let Some(m) = random_monomial(&mut rng, &gens, t) {
            picked.push(m);
        }
    }
    picked
        .into_par_iter()
        .filter(|m| !d1(&d1_monomial(m)).is_zero())
        .collect()
}

fn d1_items(ctx: &SuiteContext) -> Vec<Item> {
    let b = &ctx.bounds;
    let reg = ctx.cx.registry();
    let top = b.exhaustive_t.min(reg.t_bound());
    let mut items: Vec<Item> = d1_squared_exhaustive(reg, top)
        .into_iter()
        .map(|(t, (n, bad))| {
            let verdict = if bad.is_empty() { Verdict::Pass } else { Verdict::Fail };
            let mut w = format!("{n} monomials");
            if let Some(m) = bad.first() {
                w = format!("{w}; d1^2({m}) != 0");
            }
            Item::new(format!("d1-squared t={t}"), "d1 on E1, every monomial", verdict, w)
        })
        .collect();
    if reg.t_bound() > top {
        let bad = d1_squared_random(reg, top, reg.t_bound(), b.random_samples, b.seed);
        let verdict = if bad.is_empty() { Verdict::Pass } else { Verdict::Fail };
        let mut w = format!("{} random monomials, seed {}", b.random_samples, b.seed);
        if let Some(m) = bad.first() {
            w = format!("{w}; d1^2({m}) != 0");
        }
        items.push(Item::new(
            format!("d1-squared {top}<t<={}", reg.t_bound()),
            "d1 on E1, random monomials",
            verdict,
            w,
        ));
    }
    items
}

fn class_item(cx: &Complex, id: String, locus: String, p: &Poly) -> Item {
    let t = p.degree().map_or(0, |d| d.t);
    if t > cx.registry().t_bound() {
        return Item::new(id, locus, Verdict::NotApplicable, format!("t = {t} beyond the bound"));
    }
    let cycle = cx.is_cycle(p);
    let boundary = cx.is_boundary(p);
    match (cycle, boundary) {
        (Ok(true), Ok(false)) => Item::new(id, locus, Verdict::Pass, "cycle, not a boundary"),
        (Ok(c), Ok(b)) => Item::new(
            id,
            locus,
            Verdict::Fail,
            format!("cycle: {c}, boundary: {b}; d1 = {}", d1(p)),
        ),
        (Err(e), _) | (_, Err(e)) => Item::new(id, locus, Verdict::Fail, e.to_string()),
    }
}

fn table_limit(table: u32) -> u32 {
    if table == 13 {
        54
    } else {
        108
    }
}

fn generator_items(ctx: &SuiteContext) -> Vec<Item> {
    let gens: Vec<_> = ctx
        .generators
        .iter()
        .filter(|g| g.t < table_limit(g.table))
        .collect();
    let mut items: Vec<Item> = gens
        .par_iter()
        .map(|g| {
            class_item(
                &ctx.cx,
                format!("generator {} (t={})", g.name, g.t),
                format!("Table {}", g.table),
                &g.value,
            )
        })
        .collect();
    let mut cells: BTreeMap<(u32, TriDegree), Vec<_>> = BTreeMap::new();
    for g in &gens {
        if let Some(d) = g.value.degree() {
            cells.entry((g.table, d)).or_default().push(*g);
        }
    }
    let multi: Vec<_> = cells.into_iter().filter(|(_, v)| v.len() > 1).collect();
    let independent: Vec<Item> = multi.par_iter().map(|((table, d), v)| {
        let names: Vec<&str> = v.iter().map(|g| g.name.as_str()).collect();
        let polys: Vec<Poly> = v.iter().map(|g| g.value.clone()).collect();
        let id = format!("independent {d}: {}", names.join(", "));
        let locus = format!("Table {table}");
        match ctx.cx.homology_rank(&polys) {
            Ok(r) if r == polys.len() => Item::new(id, locus, Verdict::Pass, format!("rank {r}")),
            Ok(r) => Item::new(id, locus, Verdict::Fail, format!("rank {r} < {}", polys.len())),
            Err(e) => Item::new(id, locus, Verdict::Fail, e.to_string()),
        }
    }).collect();
    items.extend(independent);
    items
}

/// The Massey-product construction behind each Table 11 name.
pub(crate) fn table11_construction(name: &str, mc: &MasseyContext) -> Option<Result<Poly, MasseyError>> {
    let psi = |idx, hats| mc.psi(idx, hats);
    const T: bool = true;
    const F: bool = false;
    Some(match name {
        "phi3" => mc.phi_pair(2, 3),
        "phit5" => mc.phi_pair(2, 4),
        "phit6" => mc.phi_pair(3, 4),
        "phit9" => mc.phi_pair(2, 5),
        "phit10" => mc.phi_pair(3, 5),
        "phit12" => mc.phi_pair(4, 5),
        "phit7" => Ok(phi_triple(2, 3, 4)),
        "phit11" => Ok(phi_triple(2, 3, 5)),
        "phit13" => Ok(phi_triple(2, 4, 5)),
        "omega1" => mc.omega(2, 3, 4),
        "omega2" => mc.omega(2, 3, 5),
        "omega3" => mc.omega(2, 4, 5),
        "omega4" => mc.omega(3, 4, 5),
        "psi1" => psi([2, 3, 4], [T, F, F]),
        "psi2" => psi([2, 3, 4], [F, T, F]),
        "psi3" => psi([2, 3, 4], [T, T, F]),
        "psi4" => psi([2, 3, 4], [F, F, T]),
        "psi5" => psi([2, 3, 4], [T, F, T]),
        "psi6" => psi([2, 3, 5], [T, F, F]),
        "psi7" => psi([2, 3, 4], [F, T, T]),
        "psi8" => psi([2, 3, 5], [F, T, F]),
        "psi9" => psi([2, 3, 5], [T, T, F]),
        "psi10" => psi([2, 4, 5], [T, F, F]),
        _ => return None,
    })
}

fn construction_items(ctx: &SuiteContext) -> Vec<Item> {
    let mc = MasseyContext::new(&ctx.cx);
    let gens: Vec<_> = ctx.generators.of_table(11).collect();
    gens.par_iter()
        .filter_map(|g| {
            let built = table11_construction(&g.name, &mc)?;
            let id = format!("construction {}", g.name);
            let locus = "Table 11 and the F-notation".to_string();
            Some(match built {
                Ok(p) if p == g.value => Item::new(id, locus, Verdict::Pass, "identical"),
                Ok(p) => Item::new(id, locus, Verdict::Fail, format!("built {p}")),
                Err(e) => Item::new(id, locus, Verdict::Fail, e.to_string()),
            })
        })
        .collect()
}

/// The printed witnesses `c_{u_i,φ̃_{jk}}` and `c_{u₁,ω_{ijk}}` against the
/// solved ones.
fn witness_items(ctx: &SuiteContext) -> Vec<Item> {
    let mc = MasseyContext::new(&ctx.cx);
    let mut jobs = Vec::new();
    for (i, j, k) in [(2, 3, 4), (3, 2, 4), (4, 2, 3), (2, 3, 5), (3, 2, 5), (5, 2, 3)] {
        jobs.push((i, j, k, false));
    }
    for (i, j, k) in [(2, 3, 4), (2, 3, 5)] {
        jobs.push((i, j, k, true));
    }
    jobs.par_iter()
        .map(|&(i, j, k, omega)| {
            let (id, printed, solved) = if omega {
                let om = mc.omega(i, j, k);
                (
                    format!("witness c(u1, omega{i}{j}{k})"),
                    witness_u1_omega(i, j, k),
                    om.and_then(|o| mc.c_witness(&u(1), &o)),
                )
            } else {
                let ph = mc.phi_pair(j, k);
                (
                    format!("witness c(u{i}, phit{j}{k})"),
                    witness_u_phi(i, j, k),
                    ph.and_then(|p| mc.c_witness(&u(i), &p)),
                )
            };
            let locus = "printed Massey witnesses";
            match solved {
                Ok(s) if s == printed => Item::new(id, locus, Verdict::Pass, printed.to_string()),
                Ok(s) => {
                    let diff = &s + &printed;
                    let cyc = ctx.cx.is_cycle(&diff).unwrap_or(false);
                    let v = if cyc { Verdict::Pass } else { Verdict::Fail };
                    Item::new(id, locus, v, format!("solved {s}; differs by a cycle: {cyc}"))
                }
                Err(e) => Item::new(id, locus, Verdict::Fail, e.to_string()),
            }
        })
        .collect()
}

/// `A_{<u₂,ψ₇> + <φ̃₇,ω₁>}` as printed.
pub fn combined_a() -> Poly {
    let c1358 = c(13) + c(8) * c(5) + c(4) * c(9);
    h(0) * (c(5) * c(8) * c(13) + c(4) * c(9) * c(13))
        + h(1) * h(3) * c(9) * c(13)
        + h(1) * h(4) * c(5) * c(13)
        + h(2) * h(3) * c(8) * c1358.clone()
        + h(3).square() * c(2) * c(8) * c(9)
        + h(4).square() * c(2) * c(4) * c(5)
        + h(2) * h(4) * c(4) * c1358
        + h(3) * h(4) * c(2) * (c(8) * c(5) + c(4) * c(9))
}

pub fn suite_mass(ctx: &SuiteContext) -> Vec<Item> {
    let mut items = d1_items(ctx);
    items.extend(generator_items(ctx));
    items.extend(construction_items(ctx));
    items.extend(witness_items(ctx));
    items.push(class_item(
        &ctx.cx,
        "generator A<u2,psi7>+<phit7,omega1> (t=104)".into(),
        "extra generator of E^{2,0,104}".into(),
        &combined_a(),
    ));
    items
}
