//! B-series in `MSp_*(MSp)`, the conjugation `χ(B)`, and Kochman's expansion of
//! the Hurewicz image `h(Φ_m)`. The coefficient of `b_E` in `h(Φ_m)` is `S_E Φ_m`.
//!
//! Series are always truncated to a finite set of b-monomials closed under
//! division (a [`Lattice`]). Queries for a single `S_E` use the divisors of
//! `E`, which keeps every intermediate product small.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::binomial::{binom_exact, is_odd};
use crate::phi::{PhiSymbol, PhiVector};

/// An exponent vector `E = (e_1, ..., e_n)`; also the b-monomial `b_E`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OpIndex {
    exps: BTreeMap<u32, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad operation index `{0}`")]
pub struct OpIndexError(pub String);

impl OpIndex {
    pub fn empty() -> Self {
        OpIndex::default()
    }

    /// From a part list such as `[2, 2, 2]`; zero parts are dropped.
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut e = OpIndex::empty();
        for &p in parts.iter().filter(|&&p| p > 0) {
            *e.exps.entry(p).or_insert(0) += 1;
        }
        e
    }

    pub fn from_exponents(it: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut e = OpIndex::empty();
        for (i, x) in it {
            if i > 0 && x > 0 {
                *e.exps.entry(i).or_insert(0) += x;
            }
        }
        e
    }

    /// `k` taken `m` times.
    pub fn repeated(k: u32, m: u32) -> Self {
        OpIndex::from_exponents([(k, m)])
    }

    pub fn single(k: u32) -> Self {
        OpIndex::repeated(k, 1)
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.exps.iter().map(|(&i, &e)| i * e).sum()
    }

    /// Number of parts, `Σ e_i`.
    pub fn len(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, i: u32) -> u32 {
        self.exps.get(&i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&i, &e)| (i, e))
    }

    /// Parts in descending order.
    pub fn parts(&self) -> Vec<u32> {
        self.exps
            .iter()
            .rev()
            .flat_map(|(&i, &e)| std::iter::repeat(i).take(e as usize))
            .collect()
    }

    /// `Some((k, m))` when all parts are equal.
    pub fn as_repeated(&self) -> Option<(u32, u32)> {
        match self.exps.len() {
            1 => self.exps.iter().next().map(|(&k, &m)| (k, m)),
            _ => None,
        }
    }

    pub fn divides(&self, other: &OpIndex) -> bool {
        self.exps.iter().all(|(i, &e)| other.exponent(*i) >= e)
    }

    pub fn add(&self, other: &OpIndex) -> OpIndex {
        OpIndex::from_exponents(self.exponents().chain(other.exponents()))
    }

    /// `self - other`, if `other` divides `self`.
    pub fn checked_sub(&self, other: &OpIndex) -> Option<OpIndex> {
        if !other.divides(self) {
            return None;
        }
        Some(OpIndex::from_exponents(
            self.exponents().map(|(i, e)| (i, e - other.exponent(i))),
        ))
    }

    /// All `F` with `F | self`, including the empty index and `self`.
    pub fn divisors(&self) -> Vec<OpIndex> {
        let mut out = vec![OpIndex::empty()];
        for (i, e) in self.exponents() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in &out {
                for x in 0..=e {
                    let mut d = d.clone();
                    if x > 0 {
                        d.exps.insert(i, x);
                    }
                    next.push(d);
                }
            }
            out = next;
        }
        out
    }

    /// Ordered splittings `(A, B)` with `A + B = self`.
    pub fn splittings(&self) -> Vec<(OpIndex, OpIndex)> {
        self.divisors()
            .into_iter()
            .map(|a| {
                let b = self.checked_sub(&a).expect("divisor");
                (a, b)
            })
            .collect()
    }

    /// The b-monomial form, e.g. `b3*b2^4`; `1` when empty.
    pub fn to_monomial_string(&self) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.exps
            .iter()
            .rev()
            .map(|(&i, &e)| if e == 1 { format!("b{i}") } else { format!("b{i}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for OpIndex {
    /// Repeated-part notation `3,2,2`; the empty index prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.parts().iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for OpIndex {
    type Err = OpIndexError;

    /// Accepts `2,2,2`, `b3^1*b2^4`, `()` and `1`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || OpIndexError(text.to_string());
        if t == "()" || t == "1" {
            return Ok(OpIndex::empty());
        }
        if t.starts_with('b') {
            let mut e = OpIndex::empty();
            for f in t.split('*') {
                let f = f.strip_prefix('b').ok_or_else(bad)?;
                let (i, x) = match f.split_once('^') {
                    Some((i, x)) => (i, x.parse::<u32>().map_err(|_| bad())?),
                    None => (f, 1),
                };
                let i: u32 = i.parse().map_err(|_| bad())?;
                if i == 0 {
                    return Err(bad());
                }
                e = e.add(&OpIndex::repeated(i, x));
            }
            return Ok(e);
        }
        let parts = t
            .split(',')
            .map(|p| p.parse::<u32>().ok().filter(|&p| p > 0))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        Ok(OpIndex::from_parts(&parts))
    }
}

/// A finite set of b-monomials closed under division.
#[derive(Debug, Clone)]
pub struct Lattice {
    members: HashSet<OpIndex>,
    by_weight: BTreeMap<u32, Vec<OpIndex>>,
}

impl Lattice {
    fn from_members(members: impl IntoIterator<Item = OpIndex>) -> Self {
        let members: HashSet<OpIndex> = members.into_iter().collect();
        let mut by_weight: BTreeMap<u32, Vec<OpIndex>> = BTreeMap::new();
        for m in &members {
            by_weight.entry(m.weight()).or_default().push(m.clone());
        }
        for v in by_weight.values_mut() {
            v.sort();
        }
        Lattice { members, by_weight }
    }

    /// All divisors of `e`.
    pub fn divisors_of(e: &OpIndex) -> Self {
        Lattice::from_members(e.divisors())
    }

    /// Every b-monomial of weight at most `w`.
    pub fn up_to_weight(w: u32) -> Self {
        let mut out = Vec::new();
        fn rec(rest: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<OpIndex>) {
            out.push(OpIndex::from_parts(cur));
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        rec(w, w, &mut Vec::new(), &mut out);
        Lattice::from_members(out)
    }

    pub fn contains(&self, e: &OpIndex) -> bool {
        self.members.contains(e)
    }

    pub fn of_weight(&self, w: u32) -> &[OpIndex] {
        self.by_weight.get(&w).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// An integer polynomial in `b_1, b_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BSeriesPoly {
    terms: BTreeMap<OpIndex, BigInt>,
}

impl BSeriesPoly {
    pub fn zero() -> Self {
        BSeriesPoly::default()
    }

    pub fn one() -> Self {
        BSeriesPoly::monomial(OpIndex::empty(), BigInt::one())
    }

    pub fn monomial(e: OpIndex, c: BigInt) -> Self {
        let mut p = BSeriesPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: OpIndex, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coefficient(&self, e: &OpIndex) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpIndex, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms of weight `w` only.
    pub fn component(&self, w: u32) -> BSeriesPoly {
        BSeriesPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.weight() == w)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &BSeriesPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> BSeriesPoly {
        BSeriesPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Product with terms outside `lattice` discarded.
    pub fn mul_in(&self, other: &BSeriesPoly, lattice: &Lattice) -> BSeriesPoly {
        let mut out = BSeriesPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.add(b);
                if lattice.contains(&e) {
                    out.add_term(e, x * y);
                }
            }
        }
        out
    }
}

impl fmt::Display for BSeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (abs.is_one(), e.is_empty()) {
                (true, _) => write!(f, "{}", e.to_monomial_string())?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", e.to_monomial_string())?,
            }
        }
        Ok(())
    }
}

/// Coefficient of `b_F` in `B^k`: `C(k, |F|) · |F|! / Π f_i!`.
pub fn b_power_coefficient(k: u32, f: &OpIndex) -> BigInt {
    let parts = f.len() as i64;
    let mut c = binom_exact(k as i64, parts);
    if c.is_zero() {
        return c;
    }
    let mut left = parts;
    for (_, e) in f.exponents() {
        c *= binom_exact(left, e as i64);
        left -= e as i64;
    }
    c
}

/// The weight-`w` part of `B^k`, restricted to `lattice`.
pub fn b_power_in(k: u32, w: u32, lattice: &Lattice) -> BSeriesPoly {
    let mut p = BSeriesPoly::zero();
    for f in lattice.of_weight(w) {
        p.add_term(f.clone(), b_power_coefficient(k, f));
    }
    p
}

/// `B^k_w`, the full weight-`w` component of `(1 + b_1 + b_2 + ...)^k`.
pub fn b_power_component(k: u32, w: u32) -> BSeriesPoly {
    b_power_in(k, w, &Lattice::up_to_weight(w))
}

/// `χ(B)^t_w` restricted to `lattice`, via the first-step recursion of the chain sum.
pub fn chi_in(t: u32, w: u32, lattice: &Lattice) -> BSeriesPoly {
    let n = t + w;
    // x[q - t] = χ(B)^q_{n-q}
    let mut x: Vec<BSeriesPoly> = vec![BSeriesPoly::zero(); (w + 1) as usize];
    for q in (t..=n).rev() {
        let mut acc = b_power_in(q, n - q, lattice).neg();
        for q2 in q + 1..n {
            let prod = x[(q2 - t) as usize].mul_in(&b_power_in(q, q2 - q, lattice), lattice);
            acc.add_assign(&prod.neg());
        }
        x[(q - t) as usize] = acc;
    }
    x.swap_remove(0)
}

/// `χ(B)^t_w`, the full weight-`w` component.
pub fn chi_component(t: u32, w: u32) -> BSeriesPoly {
    chi_in(t, w, &Lattice::up_to_weight(w))
}

/// One slot of `h(Φ_m)`: the coefficient series in front of `Φ_i` (`i = 0` is θ₁).
fn kochman_slot(m: u32, i: u32, lattice: &Lattice) -> BSeriesPoly {
    let mut p = BSeriesPoly::zero();
    let b = |j: u32| {
        if j == 0 {
            BSeriesPoly::one()
        } else {
            BSeriesPoly::monomial(OpIndex::single(j), BigInt::one())
        }
    };
    let keep = |s: BSeriesPoly| BSeriesPoly {
        terms: s.terms.into_iter().filter(|(e, _)| lattice.contains(e)).collect(),
    };
    if i == 0 {
        for k in 0..m {
            let chi = chi_in(2 * k + 1, 2 * m - 2 * k - 1, lattice);
            p.add_assign(&b(2 * k).mul_in(&chi, lattice));
        }
    } else {
        p.add_assign(&keep(b(2 * m - 2 * i)));
        for h in 0..m - i {
            let chi = chi_in(2 * h + 2 * i, 2 * m - 2 * h - 2 * i, lattice);
            p.add_assign(&b(2 * h).mul_in(&chi, lattice));
        }
    }
    p
}

/// The expansion of `h(Φ_m)` over all b-monomials of weight at most `wmax`.
pub fn kochman_h(m: u32, wmax: u32) -> BTreeMap<OpIndex, Vec<(PhiSymbol, BigInt)>> {
    assert!(m >= 1, "Φ_m needs m >= 1");
    let lattice = Lattice::up_to_weight(wmax);
    let mut out: BTreeMap<OpIndex, Vec<(PhiSymbol, BigInt)>> = BTreeMap::new();
    for i in (0..=m).rev() {
        for (e, c) in kochman_slot(m, i, &lattice).terms() {
            out.entry(e.clone())
                .or_default()
                .push((PhiSymbol::phi(i), c.clone()));
        }
    }
    out
}

fn sop_cache() -> &'static Mutex<HashMap<(OpIndex, u32), PhiVector>> {
    static CACHE: OnceLock<Mutex<HashMap<(OpIndex, u32), PhiVector>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `S_E Φ_m`: the b_E coefficient of `h(Φ_m)` mod 2.
pub fn s_on_phi(e: &OpIndex, m: u32) -> PhiVector {
    if m == 0 {
        return if e.is_empty() {
            PhiVector::single(PhiSymbol::Theta1)
        } else {
            PhiVector::zero()
        };
    }
    let key = (e.clone(), m);
    if let Some(v) = sop_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let w = e.weight();
    let slot = if w == 2 * m - 1 {
        Some(0)
    } else if w % 2 == 0 && w < 2 * m {
        Some(m - w / 2)
    } else {
        None
    };
    let v = match slot {
        Some(i) => {
            let lattice = Lattice::divisors_of(e);
            let c = kochman_slot(m, i, &lattice).coefficient(e);
            if is_odd(&c) {
                PhiVector::single(PhiSymbol::phi(i))
            } else {
                PhiVector::zero()
            }
        }
        None => PhiVector::zero(),
    };
    sop_cache().lock().unwrap().insert(key, v.clone());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let a: OpIndex = "2,2,2".parse().unwrap();
        assert_eq!(a, OpIndex::repeated(2, 3));
        let b: OpIndex = "b3^1*b2^4".parse().unwrap();
        assert_eq!(b.parts(), vec![3, 2, 2, 2, 2]);
        assert_eq!(b.to_string(), "3,2,2,2,2");
        assert_eq!(b.to_monomial_string(), "b3*b2^4");
        assert!("2,x".parse::<OpIndex>().is_err());
    }

    #[test]
    fn small_components() {
        assert_eq!(b_power_component(2, 2).to_string(), "b1^2 + 2*b2");
        assert_eq!(chi_component(1, 1).to_string(), "-b1");
        for t in 0..5 {
            assert_eq!(chi_component(t, 0).to_string(), "-1");
        }
    }

    #[test]
    fn kochman_top_and_bottom() {
        let m = 3;
        let h = kochman_h(m, 2 * m);
        let unit = &h[&OpIndex::empty()];
        assert!(unit.contains(&(PhiSymbol::Phi(m), BigInt::one())));
        let lin = &h[&OpIndex::single(2 * m - 1)];
        assert!(lin.iter().any(|(s, c)| *s == PhiSymbol::Theta1 && c.abs().is_one()));
        for j in 1..m {
            let row = &h[&OpIndex::single(2 * j)];
            let c = row.iter().find(|(s, _)| *s == PhiSymbol::Phi(m - j)).unwrap();
            assert!(is_odd(&c.1), "j={j}");
        }
    }

    #[test]
    fn table_rows() {
        assert_eq!(s_on_phi(&OpIndex::repeated(2, 2), 9).to_string(), "phi7");
        assert_eq!(s_on_phi(&OpIndex::single(9), 5).to_string(), "theta1");
        assert!(s_on_phi(&OpIndex::single(99), 2).is_zero());
    }
}
