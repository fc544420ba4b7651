//! Sparse trigraded polynomials over F₂ in the generators h₀, hᵢ, uⱼ, cₙ.
//!
//! Monomials are kept in a fixed canonical form so that equal elements always
//! serialize identically. The text grammar accepted by [`parse_poly`] is
//!
//! ```text
//! poly   := '0' | term ('+' term)*
//! term   := '1' | factor ('*' factor)*
//! factor := gen ('^' uint)?
//! gen    := 'h0' | 'h' uint | 'u' uint | 'c' uint | 'c{' uint (',' uint)* '}'
//! ```

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid c index {0}: must be >= 2 and not of the form 2^k - 1")]
    InvalidC(u32),
    #[error("invalid alias c{{{0}}}")]
    InvalidAlias(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// True when `c_n` is a generator of the E₁-term.
pub fn is_valid_c(n: u32) -> bool {
    n >= 2 && !(n + 1).is_power_of_two()
}

/// A polynomial generator. The derived order is the canonical factor order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    H0,
    H(u32),
    U(u32),
    C(u32),
}

impl Gen {
    pub fn h(i: u32) -> Gen {
        if i == 0 {
            Gen::H0
        } else {
            Gen::H(i)
        }
    }

    pub fn u(j: u32) -> Result<Gen, AlgebraError> {
        if j == 0 {
            return Err(AlgebraError::UnknownGenerator("u0".into()));
        }
        Ok(Gen::U(j))
    }

    pub fn c(n: u32) -> Result<Gen, AlgebraError> {
        if is_valid_c(n) {
            Ok(Gen::C(n))
        } else {
            Err(AlgebraError::InvalidC(n))
        }
    }

    pub fn degree(&self) -> TriDegree {
        match *self {
            Gen::H0 => TriDegree::new(2, 0, 0),
            Gen::H(i) => TriDegree::new(1, 0, 2 * ((1 << i) - 1)),
            Gen::U(j) => TriDegree::new(0, 1, 2 * ((1 << j) - 1)),
            Gen::C(n) => TriDegree::new(0, 0, 4 * n),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::H0 => write!(f, "h0"),
            Gen::H(i) => write!(f, "h{i}"),
            Gen::U(j) => write!(f, "u{j}"),
            Gen::C(n) => write!(f, "c{n}"),
        }
    }
}

/// Alternative subscript forms of a c-generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CAlias {
    /// `c_{1,i}` = `c_{2^{i-1}}`.
    OneI(u32),
    /// `c_{i_1,...,i_q}` with `2 <= i_1 < ... < i_q`, equal to `c_{2m-1}` with `m = Σ 2^{i_t-2}`.
    Multi(Vec<u32>),
    Plain,
}

/// Resolves a subscript list `c{i_1,...,i_q}` to the integer index.
pub fn resolve_alias(indices: &[u32]) -> Result<u32, AlgebraError> {
    let bad = || {
        AlgebraError::InvalidAlias(
            indices
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
    };
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad());
    }
    match indices {
        [1, i] if *i >= 2 && *i <= 32 => Ok(1 << (i - 1)),
        _ if indices.len() >= 2 && indices[0] >= 2 && *indices.last().unwrap() <= 32 => {
            let m: u64 = indices.iter().map(|&i| 1u64 << (i - 2)).sum();
            let n = 2 * m - 1;
            u32::try_from(n).map_err(|_| bad())
        }
        _ => Err(bad()),
    }
}

/// The alias form of `c_n`.
pub fn canonical_name(n: u32) -> Result<CAlias, AlgebraError> {
    if !is_valid_c(n) {
        return Err(AlgebraError::InvalidC(n));
    }
    if n.is_power_of_two() {
        return Ok(CAlias::OneI(n.trailing_zeros() + 1));
    }
    if n % 2 == 1 {
        let m = (n + 1) / 2;
        let idx = (0..32).filter(|b| m >> b & 1 == 1).map(|b| b + 2).collect();
        return Ok(CAlias::Multi(idx));
    }
    Ok(CAlias::Plain)
}

/// Tridegree `(q, s, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, serde::Serialize)]
pub struct TriDegree {
    pub q: u32,
    pub s: u32,
    pub t: u32,
}

impl TriDegree {
    pub const fn new(q: u32, s: u32, t: u32) -> Self {
        TriDegree { q, s, t }
    }

    pub fn scale(self, k: u32) -> Self {
        TriDegree::new(self.q * k, self.s * k, self.t * k)
    }
}

impl Add for TriDegree {
    type Output = TriDegree;
    fn add(self, o: TriDegree) -> TriDegree {
        TriDegree::new(self.q + o.q, self.s + o.s, self.t + o.t)
    }
}

impl fmt::Display for TriDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.q, self.s, self.t)
    }
}

/// A monomial with coefficient 1; factors sorted by generator, exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Gen, u32)>,
    deg: TriDegree,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
            deg: TriDegree::default(),
        }
    }

    pub fn gen(g: Gen) -> Self {
        Monomial::from_factors([(g, 1)])
    }

    /// Builds a monomial from arbitrary `(generator, exponent)` pairs, merging repeats.
    pub fn from_factors(it: impl IntoIterator<Item = (Gen, u32)>) -> Self {
        let mut factors: Vec<(Gen, u32)> = it.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by_key(|&(g, _)| g);
        let mut merged: Vec<(Gen, u32)> = Vec::with_capacity(factors.len());
        for (g, e) in factors {
            match merged.last_mut() {
                Some((h, f)) if *h == g => *f += e,
                _ => merged.push((g, e)),
            }
        }
        let deg = merged
            .iter()
            .fold(TriDegree::default(), |d, &(g, e)| d + g.degree().scale(e));
        Monomial {
            factors: merged,
            deg,
        }
    }

    pub fn factors(&self) -> &[(Gen, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> TriDegree {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, g: Gen) -> u32 {
        self.factors
            .binary_search_by_key(&g, |&(h, _)| h)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn total_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn recomputed_degree(&self) -> TriDegree {
        self.factors
            .iter()
            .fold(TriDegree::default(), |d, &(g, e)| d + g.degree().scale(e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            factors: out,
            deg: self.deg + other.deg,
        }
    }

    /// Divides out one copy of `g`; `None` if `g` does not divide.
    pub fn without_one(&self, g: Gen) -> Option<Monomial> {
        let i = self.factors.binary_search_by_key(&g, |&(h, _)| h).ok()?;
        let mut factors = self.factors.clone();
        if factors[i].1 == 1 {
            factors.remove(i);
        } else {
            factors[i].1 -= 1;
        }
        Some(Monomial {
            factors,
            deg: TriDegree::new(
                self.deg.q - g.degree().q,
                self.deg.s - g.degree().s,
                self.deg.t - g.degree().t,
            ),
        })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|&(g, e)| (g, e * k)).collect(),
            deg: self.deg.scale(k),
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total exponent first, then the exponent of the
    /// smallest generator where the two differ.
    fn cmp(&self, other: &Self) -> Ordering {
        let by_total = self.total_exponent().cmp(&other.total_exponent());
        if by_total != Ordering::Equal {
            return by_total;
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(g, e)), Some(&(h, f))) => match g.cmp(&h) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An F₂-linear combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::from(Monomial::one())
    }

    pub fn gen(g: Gen) -> Self {
        Poly::from(Monomial::gen(g))
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

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.iter().next_back()
    }

    /// Adds one monomial (characteristic 2, so a repeat cancels).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        self.terms.iter().map(|a| a.mul(m)).collect()
    }

    pub fn square(&self) -> Poly {
        self.terms.iter().map(|m| m.pow(2)).collect()
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// The common tridegree of all terms, if there is one.
    pub fn degree(&self) -> Option<TriDegree> {
        let mut it = self.terms.iter().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn generators(&self) -> BTreeSet<Gen> {
        self.terms
            .iter()
            .flat_map(|m| m.factors().iter().map(|&(g, _)| g))
            .collect()
    }
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Poly { terms }
    }
}

impl From<Gen> for Poly {
    fn from(g: Gen) -> Self {
        Poly::gen(g)
    }
}

impl FromIterator<Monomial> for Poly {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        if self.terms.len() < rhs.terms.len() {
            let mut rhs = rhs;
            std::mem::swap(self, &mut rhs);
            *self += &rhs;
        } else {
            *self += &rhs;
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += rhs;
        self
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        Poly::mul(&self, &rhs)
    }
}

impl fmt::Display for Poly {
    /// Terms from the largest down, joined by `" + "`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, m) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

pub fn render_poly(p: &Poly) -> String {
    p.to_string()
}

/// Parses the polynomial grammar; whitespace is ignored.
pub fn parse_poly(text: &str) -> Result<Poly, AlgebraError> {
    let mut p = Parser::new(text);
    let poly = p.poly()?;
    p.expect_end()?;
    Ok(poly)
}

pub fn parse_gen(text: &str) -> Result<Gen, AlgebraError> {
    let mut p = Parser::new(text);
    let g = p.gen()?;
    p.expect_end()?;
    Ok(g)
}

pub(crate) struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            _src: src,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self._src.len())
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub(crate) fn expect_end(&self) -> Result<(), AlgebraError> {
        if self.at_end() {
            Ok(())
        } else {
            self.err(format!("unexpected `{}`", self.peek().unwrap()))
        }
    }

    pub(crate) fn uint(&mut self) -> Result<u32, AlgebraError> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            v = v * 10 + c.to_digit(10).unwrap() as u64;
            if v > u32::MAX as u64 {
                return self.err("integer too large");
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected integer");
        }
        Ok(v as u32)
    }

    fn poly(&mut self) -> Result<Poly, AlgebraError> {
        if self.peek() == Some('0') && self.chars.len() == self.pos + 1 {
            self.pos += 1;
            return Ok(Poly::zero());
        }
        let mut acc = Poly::zero();
        loop {
            acc.toggle(self.term()?);
            if !self.eat('+') {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Monomial, AlgebraError> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Monomial::one());
        }
        let mut factors = Vec::new();
        loop {
            let g = self.gen()?;
            let e = if self.eat('^') { self.uint()? } else { 1 };
            factors.push((g, e));
            if !self.eat('*') {
                return Ok(Monomial::from_factors(factors));
            }
        }
    }

    pub(crate) fn gen(&mut self) -> Result<Gen, AlgebraError> {
        let start = self.offset();
        match self.bump() {
            Some('h') => Ok(Gen::h(self.uint()?)),
            Some('u') => {
                let j = self.uint()?;
                Gen::u(j)
            }
            Some('c') => {
                if self.eat('{') {
                    let mut idx = vec![self.uint()?];
                    while self.eat(',') {
                        idx.push(self.uint()?);
                    }
                    if !self.eat('}') {
                        return self.err("expected `}`");
                    }
                    Gen::c(resolve_alias(&idx)?)
                } else {
                    Gen::c(self.uint()?)
                }
            }
            Some(c) => Err(AlgebraError::UnknownGenerator(format!("{c} at {start}"))),
            None => self.err("expected generator"),
        }
    }
}

/// `g` as a polynomial; panics on an invalid c index, for building constants.
pub fn c(n: u32) -> Poly {
    Poly::gen(Gen::c(n).expect("valid c index"))
}

pub fn h(i: u32) -> Poly {
    Poly::gen(Gen::h(i))
}

pub fn u(j: u32) -> Poly {
    Poly::gen(Gen::u(j).expect("u index >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alias_examples() {
        assert_eq!(canonical_name(5).unwrap(), CAlias::Multi(vec![2, 3]));
        assert_eq!(canonical_name(4).unwrap(), CAlias::OneI(3));
        assert_eq!(canonical_name(6).unwrap(), CAlias::Plain);
        assert!(canonical_name(7).is_err());
        assert_eq!(resolve_alias(&[2, 3]).unwrap(), 5);
        assert_eq!(resolve_alias(&[1, 3]).unwrap(), 4);
    }

    #[test]
    fn render_order() {
        let p = parse_poly("u3*c2 + c4*u2 + u1*c5").unwrap();
        assert_eq!(p.to_string(), "u1*c5 + u2*c4 + u3*c2");
    }
}
