//! Relations among the named elements of E₂.
//!
//! The F-relations (the ten identities in `E^{0,*,t}` for `i, j, k` distinct
//! in `{2,3,4,5}`) and the A-relations are claimed identically after
//! substituting expansions. Table 14 is claimed in E₂, i.e. modulo
//! boundaries. Misprinted identities are reported as printed and, in a
//! separate item, as corrected.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{Item, SuiteContext, Verdict};
use crate::algebra::{h, u, Poly};
use crate::mass::kappa::{
    bracket_preimages, first_image_corrected, first_image_printed, first_preimage,
    h0_kappa_preimage, kappa,
};
use crate::mass::massey::{bracket, c1, c_alias, h_witness, phi_triple, MasseyContext, MasseyError};
use crate::mass::{d1, Complex, MassError};
use crate::tables::{builtin_relations, eval_expr, Scope};

/// How a claimed equality came out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationOutcome {
    Identical,
    UpToBoundary,
    /// Holds in neither sense; carries the difference.
    Fails(Poly),
    /// The two sides are not in one tridegree.
    Degree(String),
    /// The difference lies beyond the t-bound, so only identity was tested.
    Unknown(Poly),
}

fn outcome(cx: &Complex, lhs: &Poly, rhs: &Poly) -> RelationOutcome {
    let (a, b) = (lhs.degree(), rhs.degree());
    if (!lhs.is_zero() && a.is_none()) || (!rhs.is_zero() && b.is_none()) {
        return RelationOutcome::Degree("a side is not homogeneous".into());
    }
    if let (Some(a), Some(b)) = (a, b) {
        if a != b {
            return RelationOutcome::Degree(format!("sides in {a} and {b}"));
        }
    }
    let diff = lhs + rhs;
    if diff.is_zero() {
        return RelationOutcome::Identical;
    }
    match cx.is_boundary(&diff) {
        Ok(true) => RelationOutcome::UpToBoundary,
        Ok(false) => RelationOutcome::Fails(diff),
        Err(_) => RelationOutcome::Unknown(diff),
    }
}

fn short(p: &Poly) -> String {
    let s = p.to_string();
    if s.len() > 160 {
        format!("{}... ({} terms)", &s[..160], p.len())
    } else {
        s
    }
}

/// Verdict in identical mode; the witness records the boundary reading.
fn identical_item(id: String, locus: &str, o: RelationOutcome) -> Item {
    match o {
        RelationOutcome::Identical => Item::new(id, locus, Verdict::Pass, "identical"),
        RelationOutcome::UpToBoundary => {
            Item::new(id, locus, Verdict::Fail, "not identical; holds up to a boundary")
        }
        RelationOutcome::Fails(d) => Item::new(id, locus, Verdict::Fail, format!("difference {}", short(&d))),
        RelationOutcome::Unknown(d) => Item::new(
            id,
            locus,
            Verdict::Fail,
            format!("difference {} (beyond the t-bound for a boundary test)", short(&d)),
        ),
        RelationOutcome::Degree(w) => Item::new(id, locus, Verdict::NotApplicable, w),
    }
}

/// Verdict modulo boundaries.
fn boundary_item(id: String, locus: &str, o: RelationOutcome) -> Item {
    match o {
        RelationOutcome::Identical => Item::new(id, locus, Verdict::Pass, "identical"),
        RelationOutcome::UpToBoundary => Item::new(id, locus, Verdict::Pass, "up to a boundary"),
        RelationOutcome::Fails(d) => Item::new(id, locus, Verdict::Fail, format!("difference {}", short(&d))),
        RelationOutcome::Unknown(d) => Item::new(
            id,
            locus,
            Verdict::NotApplicable,
            format!("difference {} beyond the t-bound", short(&d)),
        ),
        RelationOutcome::Degree(w) => Item::new(id, locus, Verdict::NotApplicable, w),
    }
}

/// Why an instance could not be evaluated.
enum Skip {
    Na(String),
    Fail(String),
}

impl From<MasseyError> for Skip {
    fn from(e: MasseyError) -> Self {
        match e {
            MasseyError::Mass(MassError::BoundExceeded { .. }) | MasseyError::Forbidden { .. } => {
                Skip::Na(e.to_string())
            }
            e => Skip::Fail(e.to_string()),
        }
    }
}

fn skipped(id: String, locus: &str, s: Skip) -> Item {
    match s {
        Skip::Na(w) => Item::new(id, locus, Verdict::NotApplicable, w),
        Skip::Fail(w) => Item::new(id, locus, Verdict::Fail, w),
    }
}

/// Named elements of `E^{0,1,t}`, refused at or beyond the bound.
struct Elements<'a> {
    mc: &'a MasseyContext<'a>,
    bound: u32,
}

impl Elements<'_> {
    fn within(&self, p: Poly) -> Result<Poly, Skip> {
        match p.degree() {
            Some(d) if d.t >= self.bound => Err(Skip::Na(format!("an element has t = {} >= {}", d.t, self.bound))),
            _ => Ok(p),
        }
    }

    fn ph(&self, a: u32, b: u32) -> Result<Poly, Skip> {
        let p = self.mc.phi_pair(a.min(b), a.max(b))?;
        self.within(p)
    }

    fn pt(&self, i: u32, j: u32, k: u32) -> Result<Poly, Skip> {
        let mut s = [i, j, k];
        s.sort();
        self.within(phi_triple(s[0], s[1], s[2]))
    }

    fn om(&self, i: u32, j: u32, k: u32) -> Result<Poly, Skip> {
        let p = self.mc.omega(i, j, k)?;
        self.within(p)
    }

    fn psi(&self, idx: [u32; 3], hats: [bool; 3]) -> Result<Poly, Skip> {
        let p = self.mc.psi(idx, hats)?;
        self.within(p)
    }
}

fn sq(p: Poly) -> Poly {
    p.square()
}

fn cij(i: u32, j: u32) -> Poly {
    c_alias(&[i.min(j), i.max(j)])
}

type Sides = Result<(Poly, Poly), Skip>;

/// The F-relations for one ordered triple; `name` selects the identity.
fn f_relation(e: &Elements, name: &str, i: u32, j: u32, k: u32) -> Sides {
    const T: bool = true;
    const F: bool = false;
    let idx = [i, j, k];
    Ok(match name {
        "1" => (
            u(i) * e.ph(j, k)? + u(j) * e.ph(i, k)? + u(k) * e.ph(i, j)?,
            u(1) * e.om(i, j, k)?,
        ),
        "2" | "2/omega" | "2/corrected" => {
            let first = if name == "2/omega" { e.om(i, j, k)? } else { e.pt(i, j, k)? };
            let second = if name == "2/corrected" { e.ph(i, k)? } else { e.ph(j, k)? };
            (
                u(i) * first + e.ph(i, j)? * second,
                u(1) * e.psi(idx, [T, F, F])? + u(j) * u(k) * sq(c1(i)),
            )
        }
        "3" => (
            e.ph(i, j)? * e.pt(i, j, k)?,
            u(1) * e.psi(idx, [T, T, F])?
                + u(i) * e.ph(i, k)? * sq(c1(j))
                + u(j) * e.ph(j, k)? * sq(c1(i)),
        ),
        "4" | "4/corrected" => {
            let mut rhs = e.ph(i, j)? * e.om(i, j, k)?;
            if name == "4/corrected" {
                rhs += u(1) * u(k) * sq(cij(i, j));
            }
            (u(i) * e.psi(idx, [F, T, F])? + u(j) * e.psi(idx, [T, F, F])?, rhs)
        }
        "5" | "5/squared" => {
            let (a, b) = if name == "5" {
                (u(i), u(j))
            } else {
                (sq(u(i)), sq(u(j)))
            };
            (
                sq(e.ph(i, j)?),
                sq(u(1)) * sq(cij(i, j)) + a * sq(c1(j)) + b * sq(c1(i)),
            )
        }
        "6" => (
            u(i) * e.psi(idx, [T, T, F])? + e.ph(i, j)? * e.psi(idx, [T, F, F])?,
            u(1) * e.ph(i, k)? * sq(cij(i, j)) + u(j) * e.om(i, j, k)? * sq(c1(i)),
        ),
        "7" => (
            u(i) * e.psi(idx, [F, T, T])?
                + e.ph(i, j)? * e.psi(idx, [F, F, T])?
                + e.ph(i, k)? * e.psi(idx, [F, T, F])?,
            e.pt(i, j, k)? * e.om(i, j, k)?,
        ),
        "8" => (
            sq(e.om(i, j, k)?),
            sq(u(i)) * sq(cij(j, k)) + sq(u(j)) * sq(cij(i, k)) + sq(u(k)) * sq(cij(i, j)),
        ),
        "9" => {
            let mut s = [i, j, k];
            s.sort();
            (
                sq(e.pt(i, j, k)?),
                sq(u(1)) * sq(c_alias(&s))
                    + sq(u(i)) * sq(c1(j)) * sq(c1(k))
                    + sq(u(j)) * sq(c1(i)) * sq(c1(k))
                    + sq(u(k)) * sq(c1(j)) * sq(c1(i)),
            )
        }
        _ => unreachable!("unknown F-relation {name}"),
    })
}

/// The triple positions that matter for each identity, used to drop
/// instances that repeat another.
fn f_key(name: &str, i: u32, j: u32, k: u32) -> Vec<u32> {
    let sorted = |mut v: Vec<u32>| {
        v.sort();
        v
    };
    match name {
        "1" | "8" | "9" => sorted(vec![i, j, k]),
        "5" | "5/squared" => sorted(vec![i, j]),
        "2/corrected" | "7" => [vec![i], sorted(vec![j, k])].concat(),
        "3" | "4" | "4/corrected" => [sorted(vec![i, j]), vec![k]].concat(),
        _ => vec![i, j, k],
    }
}

const F_NAMES: [(&str, &str); 14] = [
    ("1", "F-relations (1)"),
    ("2", "F-relations (2) as printed, phi_ijk read as phi-tilde_ijk"),
    ("2/omega", "F-relations (2) as printed, phi_ijk read as omega_ijk"),
    ("2/corrected", "F-relations (2) with phi_ij phi_ik in place of phi_ij phi_jk"),
    ("3", "F-relations (3)"),
    ("4", "F-relations (4) as printed"),
    ("4/corrected", "F-relations (4) with u1 u_k c_ij^2 added on the right"),
    ("5", "F-relations (5) as printed"),
    ("5/squared", "F-relations (5) with u_i^2, u_j^2"),
    ("6", "F-relations (6)"),
    ("7", "F-relations (7)"),
    ("8", "F-relations (8)"),
    ("9", "F-relations (9)"),
    ("10", "F-relations (10)"),
];

fn f_items(ctx: &SuiteContext, mc: &MasseyContext) -> Vec<Item> {
    let e = Elements {
        mc,
        bound: ctx.cx.registry().t_bound(),
    };
    let mut jobs = Vec::new();
    for &(name, locus) in &F_NAMES[..13] {
        let mut seen = BTreeSet::new();
        for i in 2..=5u32 {
            for j in 2..=5u32 {
                for k in 2..=5u32 {
                    if i == j || j == k || i == k || !seen.insert(f_key(name, i, j, k)) {
                        continue;
                    }
                    jobs.push((name, locus, i, j, k));
                }
            }
        }
    }
    let mut items: Vec<Item> = jobs
        .par_iter()
        .map(|&(name, locus, i, j, k)| {
            let id = format!("F({name}) i={i} j={j} k={k}");
            match f_relation(&e, name, i, j, k) {
                Ok((l, r)) => identical_item(id, locus, outcome(&ctx.cx, &l, &r)),
                Err(s) => skipped(id, locus, s),
            }
        })
        .collect();
    items.extend(f10_items(ctx, mc));
    items
}

fn f10_items(ctx: &SuiteContext, mc: &MasseyContext) -> Vec<Item> {
    let names = ["u1", "u2", "u3", "u4", "u5", "phi3", "phit5", "phit6"];
    let el: Vec<(&str, Poly)> = names
        .iter()
        .map(|n| (*n, ctx.generators.get(n).expect("named generator").value.clone()))
        .collect();
    let bound = ctx.cx.registry().t_bound();
    let t = |p: &Poly| p.degree().map_or(0, |d| d.t);
    let mut quads = Vec::new();
    for a in 0..el.len() {
        for b in a + 1..el.len() {
            for c in b + 1..el.len() {
                for d in c + 1..el.len() {
                    quads.push([a, b, c, d]);
                }
            }
        }
    }
    let locus = F_NAMES[13].1;
    quads
        .par_iter()
        .filter_map(|q| {
            let x: Vec<&Poly> = q.iter().map(|&i| &el[i].1).collect();
            let triples = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
            if triples.iter().any(|tr| tr.iter().map(|&i| t(x[i])).sum::<u32>() >= bound) {
                return None;
            }
            let id = format!(
                "F(10) {}",
                q.iter().map(|&i| el[i].0).collect::<Vec<_>>().join(",")
            );
            let lhs = (|| -> Result<Poly, MasseyError> {
                let mut s = Poly::zero();
                for (lead, tr) in triples.iter().enumerate() {
                    s += x[lead] * &mc.massey_f(x[tr[0]], x[tr[1]], x[tr[2]])?;
                }
                Ok(s)
            })();
            Some(match lhs {
                Ok(l) => identical_item(id, locus, outcome(&ctx.cx, &l, &Poly::zero())),
                Err(e) => skipped(id, locus, e.into()),
            })
        })
        .collect()
}

const A_NAMES: [&str; 9] = ["u1", "u2", "u3", "u4", "u5", "phi3", "phit5", "phit6", "omega1"];

fn a_items(ctx: &SuiteContext, mc: &MasseyContext) -> Vec<Item> {
    let bound = ctx.cx.registry().t_bound();
    let el: Vec<(&str, Poly, u32)> = A_NAMES
        .iter()
        .map(|n| {
            let g = ctx.generators.get(n).expect("named generator");
            (*n, g.value.clone(), g.t)
        })
        .collect();
    let n = el.len();
    // (identity, indices); every A used has t < bound.
    let mut jobs: Vec<(&str, Vec<usize>)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && 2 * el[a].2 < bound && el[a].2 + el[b].2 < bound {
                jobs.push(("1", vec![a, b]));
            }
            if a < b && el[a].2 + el[b].2 < bound {
                jobs.push(("3", vec![a, b]));
                jobs.push(("3/squared", vec![a, b]));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (ta, tb, tc) = (el[a].2, el[b].2, el[c].2);
                if ta + tb < bound && ta + tc < bound && tb + tc < bound {
                    jobs.push(("2", vec![a, b, c]));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                if a != b && a != c && 2 * el[a].2 + el[b].2 + el[c].2 < bound {
                    jobs.push(("4", vec![a, b, c]));
                }
            }
        }
    }
    let eval = |name: &str, ix: &[usize]| -> Result<Vec<Poly>, MasseyError> {
        let x = |i: usize| &el[ix[i]].1;
        let a = |p: &Poly, q: &Poly| mc.massey_a(p, q);
        Ok(match name {
            "1" => vec![x(0) * &a(x(0), x(1))?, x(1) * &a(x(0), x(0))?],
            "2" => vec![
                x(0) * &a(x(1), x(2))?,
                x(1) * &a(x(0), x(2))?,
                x(2) * &a(x(0), x(1))?,
            ],
            "3" | "3/squared" => {
                let cw = mc.c_witness(x(0), x(1))?;
                let hh = h_witness(x(0))?.square() * h_witness(x(1))?.square();
                let h0 = if name == "3" { h(0) } else { h(0).square() };
                vec![a(x(0), x(1))?.square(), h0 * cw.square() + hh]
            }
            "4" => {
                let f = mc.massey_f(x(0), x(1), x(2))?;
                vec![
                    a(x(0), x(1))? * a(x(0), x(2))?,
                    h_witness(x(0))?.square() * a(x(1), x(2))? + h(0) * a(x(0), &f)?,
                ]
            }
            _ => unreachable!(),
        })
    };
    jobs.par_iter()
        .flat_map_iter(|(name, ix)| {
            let label: Vec<&str> = ix.iter().map(|&i| el[i].0).collect();
            let base = format!("A({name}) {}", label.join(","));
            let locus = match *name {
                "3" => "A-relations (3) as printed",
                "3/squared" => "A-relations (3) with h0^2",
                "1" => "A-relations (1)",
                "2" => "A-relations (2)",
                _ => "A-relations (4)",
            };
            match eval(name, ix) {
                Ok(sides) => {
                    let outs: Vec<RelationOutcome> =
                        sides.windows(2).map(|w| outcome(&ctx.cx, &w[0], &w[1])).collect();
                    let worst = outs
                        .iter()
                        .max_by_key(|o| match o {
                            RelationOutcome::Identical => 0,
                            RelationOutcome::UpToBoundary => 1,
                            RelationOutcome::Unknown(_) => 2,
                            RelationOutcome::Fails(_) => 3,
                            RelationOutcome::Degree(_) => 4,
                        })
                        .cloned()
                        .expect("at least one equality");
                    vec![
                        identical_item(format!("{base} identical"), locus, worst.clone()),
                        boundary_item(format!("{base} up-to-boundary"), locus, worst),
                    ]
                }
                Err(e) => vec![skipped(base, locus, e.into())],
            }
        })
        .collect()
}

/// `Σ A_{ξ_i,ζ_i} = 0` for the A-images of the F-relation (1).
fn linearity_items(ctx: &SuiteContext, mc: &MasseyContext) -> Vec<Item> {
    let triples = [(2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)];
    triples
        .par_iter()
        .map(|&(i, j, k)| {
            let id = format!("A-linearity {{{i},{j},{k}}}");
            let locus = "A of the F-relation (1)";
            let sum = (|| -> Result<Poly, MasseyError> {
                let ph = |a, b| mc.phi_pair(a, b);
                Ok(mc.massey_a(&u(i), &ph(j, k)?)?
                    + mc.massey_a(&u(j), &ph(i, k)?)?
                    + mc.massey_a(&u(k), &ph(i, j)?)?
                    + mc.massey_a(&u(1), &mc.omega(i, j, k)?)?)
            })();
            match sum {
                Ok(s) => boundary_item(id, locus, outcome(&ctx.cx, &s, &Poly::zero())),
                Err(e) => skipped(id, locus, e.into()),
            }
        })
        .collect()
}

fn kappa_items(ctx: &SuiteContext, mc: &MasseyContext) -> Vec<Item> {
    let cx = &ctx.cx;
    let g = |n: &str| ctx.generators.get(n).expect("named generator").value.clone();
    let k = kappa();
    let mut items = Vec::new();
    let locus_i = "kappa (i)";
    let class = match (cx.is_cycle(&k), cx.is_boundary(&k)) {
        (Ok(true), Ok(false)) => (Verdict::Pass, "cycle, not a boundary".to_string()),
        (a, b) => (Verdict::Fail, format!("cycle {a:?}, boundary {b:?}")),
    };
    items.push(Item::new("kappa nonzero class", locus_i, class.0, class.1));
    match bracket(&g("phit7"), &g("omega1")) {
        Ok(b) => items.push(boundary_item(
            "kappa in <phit7,h0,omega1>".into(),
            locus_i,
            outcome(cx, &k, &b),
        )),
        Err(e) => items.push(skipped("kappa in <phit7,h0,omega1>".into(), locus_i, e.into())),
    }
    let image = d1(&first_preimage());
    items.push(identical_item(
        "kappa d1 identity as printed".into(),
        locus_i,
        outcome(cx, &image, &first_image_printed()),
    ));
    items.push(identical_item(
        "kappa d1 identity with c13*d1(c13)".into(),
        locus_i,
        outcome(cx, &image, &first_image_corrected()),
    ));
    items.push(identical_item(
        "kappa d1 preimage of h0*kappa".into(),
        "kappa (iii)",
        outcome(cx, &d1(&h0_kappa_preimage()), &(h(0) * k.clone())),
    ));
    for (x, a, psi) in bracket_preimages() {
        let id = format!("kappa d1 identity for <u{a},h0,{psi}>");
        match bracket(&u(a), &g(psi)) {
            Ok(b) => items.push(identical_item(id, "kappa (ii)", outcome(cx, &d1(&x), &(&k + &b)))),
            Err(e) => items.push(skipped(id, "kappa (ii)", e.into())),
        }
    }
    for (p, q) in [
        (("phit6", "psi1"), ("u2", "psi7")),
        (("phit5", "psi2"), ("u3", "psi5")),
        (("u4", "psi3"), ("phi3", "psi4")),
    ] {
        let id = format!("<{},h0,{}> = <{},h0,{}>", p.0, p.1, q.0, q.1);
        match (bracket(&g(p.0), &g(p.1)), bracket(&g(q.0), &g(q.1))) {
            (Ok(l), Ok(r)) => {
                let o = outcome(cx, &l, &r);
                items.push(identical_item(format!("{id} identical"), "kappa (ii)", o.clone()));
                items.push(boundary_item(format!("{id} up-to-boundary"), "kappa (ii)", o));
            }
            (Err(e), _) | (_, Err(e)) => items.push(skipped(id, "kappa (ii)", e.into())),
        }
    }
    let _ = mc;
    items
}

const FORBIDDEN: [(&str, &str); 7] = [
    ("phit7", "omega1"),
    ("phit6", "psi1"),
    ("phit5", "psi2"),
    ("u4", "psi3"),
    ("phi3", "psi4"),
    ("u3", "psi5"),
    ("u2", "psi7"),
];

fn forbidden_items(ctx: &SuiteContext, mc: &MasseyContext) -> Vec<Item> {
    let g = |n: &str| ctx.generators.get(n).expect("named generator").value.clone();
    let locus = "forbidden pairs";
    let mut items: Vec<Item> = FORBIDDEN
        .par_iter()
        .map(|&(a, b)| {
            let id = format!("forbidden ({a},{b})");
            match mc.is_forbidden(&g(a), &g(b)) {
                Ok(true) => Item::new(id, locus, Verdict::Pass, "<xi,h0,eta> is not a boundary"),
                Ok(false) => Item::new(id, locus, Verdict::Fail, "a witness exists"),
                Err(e) => skipped(id, locus, e.into()),
            }
        })
        .collect();
    let brackets: Vec<Result<Poly, MasseyError>> =
        FORBIDDEN.iter().map(|&(a, b)| bracket(&g(a), &g(b))).collect();
    for w in 1..FORBIDDEN.len() {
        let (a, b) = FORBIDDEN[0];
        let (c, d) = FORBIDDEN[w];
        let id = format!("<{a},h0,{b}> = <{c},h0,{d}>");
        match (&brackets[0], &brackets[w]) {
            (Ok(l), Ok(r)) => items.push(boundary_item(id, locus, outcome(&ctx.cx, l, r))),
            (Err(e), _) | (_, Err(e)) => items.push(skipped(id, locus, e.clone().into())),
        }
    }
    items
}

fn table14_items(ctx: &SuiteContext) -> Vec<Item> {
    let scope = Scope {
        generators: &ctx.generators,
        db: Some(&ctx.db),
    };
    let rels = builtin_relations();
    rels.par_iter()
        .map(|r| {
            let id = r.text();
            let locus = format!("Table 14 ({})", r.origin);
            let sides: Result<Vec<Poly>, _> = r.sides.iter().map(|s| eval_expr(s, &scope)).collect();
            let sides = match sides {
                Ok(s) => s,
                Err(e) => return Item::new(id, locus, Verdict::Insufficient, e.to_string()),
            };
            let mut worst = RelationOutcome::Identical;
            for w in sides.windows(2) {
                let o = outcome(&ctx.cx, &w[0], &w[1]);
                let rank = |o: &RelationOutcome| match o {
                    RelationOutcome::Identical => 0,
                    RelationOutcome::UpToBoundary => 1,
                    RelationOutcome::Unknown(_) => 2,
                    RelationOutcome::Fails(_) => 3,
                    RelationOutcome::Degree(_) => 4,
                };
                if rank(&o) > rank(&worst) {
                    worst = o;
                }
            }
            let t = sides.iter().find_map(|p| p.degree()).map_or(0, |d| d.t);
            let mut item = boundary_item(id, &locus, worst);
            item.witness = format!("t={t}: {}", item.witness);
            item
        })
        .collect()
}

pub fn suite_relations(ctx: &SuiteContext) -> Vec<Item> {
    let mc = MasseyContext::new(&ctx.cx);
    let mut items = f_items(ctx, &mc);
    items.extend(a_items(ctx, &mc));
    items.extend(linearity_items(ctx, &mc));
    items.extend(kappa_items(ctx, &mc));
    items.extend(forbidden_items(ctx, &mc));
    items.extend(table14_items(ctx));
    items
}
