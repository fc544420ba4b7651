//! `S_ω` on E^{0,*,*} by the Cartan rule `S_ω(xy) = Σ_{ω′+ω″=ω} S_ω′(x) S_ω″(y)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use super::{Database, Target};
use crate::algebra::{is_valid_c, Gen, Monomial, Poly};
use crate::hopf::{s_on_phi, OpIndex};
use crate::phi::PhiSymbol;

/// The records an evaluation needed but could not find.
#[derive(Debug, Clone, Default, PartialEq, Eq, Error)]
pub struct Insufficient {
    pub missing: BTreeSet<(Target, OpIndex)>,
}

impl Insufficient {
    fn one(target: Target, omega: &OpIndex) -> Self {
        let mut missing = BTreeSet::new();
        missing.insert((target, omega.clone()));
        Insufficient { missing }
    }

    pub fn labels(&self) -> Vec<String> {
        self.missing
            .iter()
            .map(|(t, w)| format!("S_{{{w}}} {t}"))
            .collect()
    }
}

impl fmt::Display for Insufficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "insufficient data: missing {}", self.labels().join(", "))
    }
}

/// Whether no c-monomial has `t = 4r`.
fn c_cell_empty(r: u32) -> bool {
    let mut reach = vec![false; r as usize + 1];
    reach[0] = true;
    for k in 2..=r {
        if !is_valid_c(k) {
            continue;
        }
        for v in k..=r {
            if reach[(v - k) as usize] {
                reach[v as usize] = true;
            }
        }
    }
    !reach[r as usize]
}

/// The image of a Ray element in E₁: θ₁ ↦ u₁, Φ_{2^a} ↦ u_{a+2}, otherwise φ_k.
fn project(s: PhiSymbol, db: &Database) -> Result<Poly, Insufficient> {
    match s {
        PhiSymbol::Theta1 => Ok(Poly::gen(Gen::U(1))),
        PhiSymbol::Phi(k) if k.is_power_of_two() => Ok(Poly::gen(Gen::U(k.trailing_zeros() + 2))),
        PhiSymbol::Phi(k) => db
            .projection(k)
            .cloned()
            .ok_or_else(|| Insufficient::one(Target::Phi(k), &OpIndex::empty())),
    }
}

/// The projection of `S_ω Φ_m`, from the Kochman expansion.
pub(crate) fn project_s_on_phi(omega: &OpIndex, m: u32, db: &Database) -> Result<Poly, Insufficient> {
    let mut out = Poly::zero();
    for s in s_on_phi(omega, m).terms() {
        out += project(s, db)?;
    }
    Ok(out)
}

/// `S_ω g` for a single generator.
///
/// Records take precedence. Without one, `S_ω u₁ = 0`, `S_ω u_j` is the
/// projection of `S_ω Φ_{2^{j-2}}`, and `S_ω c_n = 0` when the target cell
/// has no monomials; anything else is missing.
pub fn act_on_generator(omega: &OpIndex, g: Gen, db: &Database) -> Result<Poly, Insufficient> {
    if omega.is_empty() {
        return Ok(Poly::gen(g));
    }
    match g {
        Gen::U(j) => {
            if let Some(r) = db.record(Target::U(j), omega) {
                return Ok(r.value.clone());
            }
            if j == 1 {
                Ok(Poly::zero())
            } else {
                project_s_on_phi(omega, 1 << (j - 2), db)
            }
        }
        Gen::C(n) => {
            if let Some(r) = db.record(Target::C(n), omega) {
                return Ok(r.value.clone());
            }
            let w = omega.weight();
            if w > n || (w < n && c_cell_empty(n - w)) {
                Ok(Poly::zero())
            } else {
                Err(Insufficient::one(Target::C(n), omega))
            }
        }
        Gen::H0 => Err(Insufficient::one(Target::H(0), omega)),
        Gen::H(i) => Err(Insufficient::one(Target::H(i), omega)),
    }
}

fn half(omega: &OpIndex) -> Option<OpIndex> {
    omega
        .exponents()
        .all(|(_, e)| e % 2 == 0)
        .then(|| OpIndex::from_exponents(omega.exponents().map(|(i, e)| (i, e / 2))))
}

struct Evaluator<'a> {
    db: &'a Database,
    memo: HashMap<(OpIndex, Monomial), Result<Poly, Insufficient>>,
}

impl Evaluator<'_> {
    fn monomial(&mut self, omega: &OpIndex, m: &Monomial) -> Result<Poly, Insufficient> {
        if omega.is_empty() {
            return Ok(Poly::from(m.clone()));
        }
        if m.is_one() {
            return Ok(Poly::zero());
        }
        let key = (omega.clone(), m.clone());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let r = self.monomial_uncached(omega, m);
        self.memo.insert(key, r.clone());
        r
    }

    fn monomial_uncached(&mut self, omega: &OpIndex, m: &Monomial) -> Result<Poly, Insufficient> {
        let squares = Monomial::from_factors(m.factors().iter().map(|&(g, e)| (g, e / 2)));
        let odd = Monomial::from_factors(m.factors().iter().map(|&(g, e)| (g, e % 2)));
        let mut out = Poly::zero();
        let mut missing = Insufficient::default();
        if !squares.is_one() {
            // S_ω(a²b) = Σ (S_{ω′/2} a)² S_{ω″} b, since the off-diagonal terms of S(a·a) cancel.
            for (w1, w2) in omega.splittings() {
                let Some(hw) = half(&w1) else { continue };
                let a = self.monomial(&hw, &squares);
                let b = self.monomial(&w2, &odd);
                match (a, b) {
                    (Ok(a), Ok(b)) => out += a.square() * b,
                    (Ok(z), Err(_)) | (Err(_), Ok(z)) if z.is_zero() => {}
                    (a, b) => {
                        for e in [a.err(), b.err()].into_iter().flatten() {
                            missing.missing.extend(e.missing);
                        }
                    }
                }
            }
        } else {
            let &(g, _) = &m.factors()[0];
            let rest = m.without_one(g).expect("g divides m");
            for (w1, w2) in omega.splittings() {
                let a = act_on_generator(&w1, g, self.db);
                let b = self.monomial(&w2, &rest);
                match (a, b) {
                    (Ok(a), Ok(b)) => out += a * b,
                    (Ok(z), Err(_)) | (Err(_), Ok(z)) if z.is_zero() => {}
                    (a, b) => {
                        for e in [a.err(), b.err()].into_iter().flatten() {
                            missing.missing.extend(e.missing);
                        }
                    }
                }
            }
        }
        if missing.missing.is_empty() {
            Ok(out)
        } else {
            Err(missing)
        }
    }
}

/// `S_ω p`, listing every missing record when the data do not suffice.
///
/// A product with one factor known to vanish needs nothing from the other.
pub fn cartan_apply(omega: &OpIndex, p: &Poly, db: &Database) -> Result<Poly, Insufficient> {
    let mut ev = Evaluator {
        db,
        memo: HashMap::new(),
    };
    let mut out = Poly::zero();
    let mut missing = Insufficient::default();
    for m in p.terms() {
        match ev.monomial(omega, m) {
            Ok(v) => out += v,
            Err(e) => missing.missing.extend(e.missing),
        }
    }
    if missing.missing.is_empty() {
        Ok(out)
    } else {
        Err(missing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn empty_cells() {
        assert!(c_cell_empty(1) && c_cell_empty(3));
        assert!(!c_cell_empty(2) && !c_cell_empty(5) && !c_cell_empty(7));
    }

    #[test]
    fn phi3_under_s2() {
        let db = Database::builtin();
        let phi3 = db.projection(3).unwrap().clone();
        let v = cartan_apply(&OpIndex::single(2), &phi3, &db).unwrap();
        assert_eq!(v, parse_poly("u3").unwrap());
        assert_eq!(cartan_apply(&OpIndex::empty(), &phi3, &db).unwrap(), phi3);
    }

    #[test]
    fn missing_records_are_listed() {
        let db = Database::builtin().without_records();
        let err = cartan_apply(&OpIndex::single(2), &parse_poly("c4").unwrap(), &db).unwrap_err();
        assert_eq!(err.labels(), vec!["S_{2} c4"]);
    }
}
