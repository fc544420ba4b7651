//! Binomial coefficients, the chain sums α and γ, and the closed forms for
//! repeated-part operations `S_{k,...,k}` acting on `Φ_n`.
//!
//! Binomials follow the convention `C(n, k) = 0` whenever `k < 0`, `k > n`
//! or `n < 0`. Chain sums are kept as exact signed integers and reduced mod 2
//! only by the callers that need a parity.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::phi::{PhiSymbol, PhiVector};

pub fn binom_exact(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k) mod 2` by Lucas: odd iff the bits of `k` are a subset of those of `n`.
pub fn binom_mod2(n: i64, k: i64) -> bool {
    n >= 0 && k >= 0 && k <= n && (k & !n) == 0
}

/// 1 iff `n` is odd and `k` is even.
pub fn mu(n: i64, k: i64) -> bool {
    n.rem_euclid(2) == 1 && k.rem_euclid(2) == 0
}

pub fn is_odd(v: &BigInt) -> bool {
    (v % 2u32).abs().is_one()
}

/// The indices of an `S_{k,...,k}` query on `Φ_n`: `m` parts of size `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoeffQuery {
    pub n: u32,
    pub m: u32,
    pub k: u32,
}

impl CoeffQuery {
    pub fn new(n: u32, m: u32, k: u32) -> Self {
        CoeffQuery { n, m, k }
    }

    fn mk(&self) -> i64 {
        self.m as i64 * self.k as i64
    }

    fn top(&self) -> i64 {
        2 * self.n as i64 - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("m*k = 2n-1: the coefficient is a gamma sum")]
    GammaCase,
    #[error("m*k is odd")]
    OddWeight,
    #[error("m*k exceeds 2n-1")]
    OutOfRange,
    #[error("gamma needs m*k = 2n-1")]
    NotGammaCase,
}

/// `Σ_{chains i -> m} (-1)^{#interior} Π f(i_j, i_{j+1})` for strictly increasing chains.
fn chain_sum(start: u32, m: u32, f: impl Fn(u32, u32) -> BigInt) -> BigInt {
    let mut tail = vec![BigInt::zero(); (m + 1) as usize];
    tail[m as usize] = BigInt::one();
    for i in (start..m).rev() {
        let mut acc = BigInt::zero();
        for j in i + 1..=m {
            let c = f(i, j);
            if c.is_zero() {
                continue;
            }
            if j == m {
                acc += c;
            } else {
                acc -= c * &tail[j as usize];
            }
        }
        tail[i as usize] = acc;
    }
    tail[start as usize].clone()
}

fn memo() -> &'static Mutex<HashMap<(bool, CoeffQuery), BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<(bool, CoeffQuery), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn memoized(gamma: bool, q: CoeffQuery, f: impl FnOnce() -> BigInt) -> BigInt {
    if let Some(v) = memo().lock().unwrap().get(&(gamma, q)) {
        return v.clone();
    }
    let v = f();
    memo().lock().unwrap().insert((gamma, q), v.clone());
    v
}

/// The α sum with no range check. `m = 0` gives the empty chain, `-1`.
pub fn alpha_raw(q: CoeffQuery) -> BigInt {
    memoized(false, q, || {
        let (n, m, k) = (q.n as i64, q.m, q.k as i64);
        -chain_sum(0, m, |i, j| {
            binom_exact(2 * n - (m - i) as i64 * k, (j - i) as i64)
        })
    })
}

/// α^n_{m;k}, the coefficient of `b_k^m` in the expansion of `h(Φ_n)`.
pub fn alpha_bruteforce(q: CoeffQuery) -> Result<BigInt, CoeffError> {
    if q.mk() == q.top() {
        return Err(CoeffError::GammaCase);
    }
    if q.mk() % 2 == 1 {
        return Err(CoeffError::OddWeight);
    }
    if q.mk() > q.top() {
        return Err(CoeffError::OutOfRange);
    }
    Ok(alpha_raw(q))
}

/// γ^n_{m;k}, the θ₁ coefficient when `mk = 2n - 1`.
pub fn gamma_bruteforce(q: CoeffQuery) -> Result<BigInt, CoeffError> {
    if q.mk() != q.top() || q.m == 0 {
        return Err(CoeffError::NotGammaCase);
    }
    Ok(memoized(true, q, || {
        let k = q.k as i64;
        chain_sum(1, q.m, |i, j| binom_exact(k * i as i64 + 1, (j - i) as i64))
    }))
}

/// `S_{k,...,k} Φ_n` with `m` parts, reduced mod 2.
pub fn s_repeated_phi(n: u32, k: u32, m: u32) -> PhiVector {
    let q = CoeffQuery::new(n, m, k);
    if q.mk() == q.top() {
        return match gamma_bruteforce(q) {
            Ok(g) if is_odd(&g) => PhiVector::single(PhiSymbol::Theta1),
            _ => PhiVector::zero(),
        };
    }
    if q.mk() % 2 == 1 || q.mk() > q.top() {
        return PhiVector::zero();
    }
    let mut c = alpha_raw(q);
    if k % 2 == 0 && m >= 1 {
        c += alpha_raw(CoeffQuery::new(n, m - 1, k));
    }
    if is_odd(&c) {
        PhiVector::single(PhiSymbol::phi(n - (m * k / 2)))
    } else {
        PhiVector::zero()
    }
}

/// Which printed hypothesis to use for the θ₁ case with three parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreePartVariant {
    /// `2n + 1 = 3k`, as printed.
    Printed,
    /// `2n - 1 = 3k`, the hypothesis under which the θ₁ coefficient is defined.
    Corrected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorollaryError {
    #[error("no closed form for {0} parts")]
    UnknownShape(u32),
    #[error("hypothesis fails: {0}")]
    Hypothesis(&'static str),
    #[error("closed form is not an integer: {0}")]
    NotInteger(String),
}

/// A closed-form answer: the target symbol and its coefficient mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForm {
    pub target: PhiSymbol,
    pub coefficient: bool,
}

impl ClosedForm {
    pub fn to_vector(self) -> PhiVector {
        if self.coefficient {
            PhiVector::single(self.target)
        } else {
            PhiVector::zero()
        }
    }
}

type Q = Ratio<BigInt>;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn qb(v: BigInt) -> Q {
    Q::from_integer(v)
}

fn qmu(n: i64, k: i64) -> Q {
    q(mu(n, k) as i64)
}

fn parity(v: Q) -> Result<bool, CorollaryError> {
    if !v.is_integer() {
        return Err(CorollaryError::NotInteger(v.to_string()));
    }
    Ok(is_odd(&v.to_integer()))
}

fn phi_target(n: i64, drop: i64) -> PhiSymbol {
    PhiSymbol::phi((n - drop).to_u32().unwrap_or(0))
}

/// The printed closed form for `m` equal parts of size `k` acting on `Φ_n`.
///
/// Shapes are keyed by the repetition count `m` in `2..=13`. The three-part
/// θ₁ case depends on `variant`; it is ignored for other shapes.
pub fn corollary_closed_form(
    m: u32,
    n: u32,
    k: u32,
    variant: ThreePartVariant,
) -> Result<ClosedForm, CorollaryError> {
    use CorollaryError::Hypothesis;
    let (n, k) = (n as i64, k as i64);
    let even_k = k % 2 == 0;
    let s = k / 2;
    let c = |a: i64, b: i64| qb(binom_exact(a, b));
    let floor = |a: i64, b: i64| a.div_euclid(b);
    let phi = |drop: i64, v: Q| -> Result<ClosedForm, CorollaryError> {
        Ok(ClosedForm {
            target: phi_target(n, drop),
            coefficient: parity(v)?,
        })
    };
    let theta = |v: Q| -> Result<ClosedForm, CorollaryError> {
        Ok(ClosedForm {
            target: PhiSymbol::Theta1,
            coefficient: parity(v)?,
        })
    };
    match m {
        2 if n > k => phi(k, q(n - k)),
        2 => Err(Hypothesis("n > k")),
        3 => {
            if even_k && 3 * s < n {
                return phi(3 * s, q(n - k));
            }
            let theta_case = match variant {
                ThreePartVariant::Printed => 2 * n + 1 == 3 * k,
                ThreePartVariant::Corrected => 2 * n - 1 == 3 * k,
            };
            if theta_case {
                theta(q(n - k))
            } else {
                Ok(ClosedForm {
                    target: PhiSymbol::Theta1,
                    coefficient: false,
                })
            }
        }
        4 if 2 * k < n => phi(2 * k, c(2 * (n - 2 * k), 4) + qmu(n, k)),
        4 => Err(Hypothesis("2k < n")),
        5 => {
            if even_k && 5 * k < 2 * n - 1 {
                phi(5 * s, c(2 * (n - 2 * k), 4) + q(n))
            } else if 5 * k == 2 * n - 1 {
                theta(c(k + 1, 4))
            } else {
                Err(Hypothesis("k = 2s and 5k < 2n - 1, or 5k = 2n - 1"))
            }
        }
        6 if 3 * k < n => phi(
            3 * k,
            Q::new((n + 1).into(), 2.into()) * qmu(n, k)
                + Q::new((n - 2).into(), 2.into()) * qmu(k, n),
        ),
        6 => Err(Hypothesis("3k < n")),
        7 if even_k && 7 * k < 2 * n - 1 => phi(7 * s, q(n * floor(n + 1, 2))),
        7 => Err(Hypothesis("k = 2s and 7k < 2n - 1")),
        8 if 4 * k < n => phi(
            4 * k,
            qmu(n, k) + Q::new(n.into(), 2.into()) * qmu(n + 1, k) + c(2 * (n - 4 * k), 8),
        ),
        8 => Err(Hypothesis("4k < n")),
        9 if even_k && 9 * k < 2 * n => phi(
            9 * s,
            q(n) + q((n + 1) * floor(n, 2)) + c(2 * (n - 4 * k), 8),
        ),
        9 => Err(Hypothesis("k = 2s and 9k < 2n")),
        10 if 5 * k < n => phi(5 * k, qmu(n, k) + q(n - k) * c(2 * (n - 4 * k), 8)),
        10 => Err(Hypothesis("5k < n")),
        11 if even_k && 11 * s < n => phi(11 * s, q(n) + q(n) * c(2 * (n - 4 * k), 8)),
        11 => Err(Hypothesis("k = 2s and 11s < n")),
        12 if 6 * k < n => {
            let h = floor(n, 2);
            phi(
                6 * k,
                qmu(n, k) * Q::new((n * n + 3).into(), 4.into())
                    + q(h * (h - k))
                    + Q::new((n - 2 * k).into(), 2.into()) * c(n - 4 * k + 1, 5),
            )
        }
        12 => Err(Hypothesis("6k < n")),
        13 if even_k && 13 * s < n => phi(
            13 * s,
            q(n * floor(n * n + 3, 4)) + Q::new(n.into(), 2.into()) * c(n + 1, 5) + q(floor(n, 2)),
        ),
        13 => Err(Hypothesis("k = 2s and 13s < n")),
        _ => Err(CorollaryError::UnknownShape(m)),
    }
}

/// Repetition counts that have a closed form.
pub const CLOSED_FORM_SHAPES: std::ops::RangeInclusive<u32> = 2..=13;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom_exact(6, 2), BigInt::from(15));
        assert_eq!(binom_exact(3, 5), BigInt::zero());
        assert_eq!(binom_exact(7, 0), BigInt::one());
        assert!(binom_mod2(6, 2));
        assert!(!binom_mod2(4, 2));
    }

    #[test]
    fn mu_table() {
        assert!(mu(5, 2));
        assert!(!mu(4, 2));
        assert!(!mu(5, 3));
    }

    #[test]
    fn empty_chain() {
        assert_eq!(alpha_raw(CoeffQuery::new(5, 0, 2)), BigInt::from(-1));
    }

    #[test]
    fn two_parts_expansion() {
        for n in 2..12i64 {
            for k in 1..n {
                let printed = -binom_exact(2 * (n - k), 2) + binom_exact(2 * n - k, 1) * binom_exact(2 * (n - k), 1);
                let q = CoeffQuery::new(n as u32, 2, k as u32);
                assert_eq!(alpha_bruteforce(q).unwrap(), printed, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn precondition_errors() {
        assert_eq!(alpha_bruteforce(CoeffQuery::new(5, 3, 3)), Err(CoeffError::GammaCase));
        assert_eq!(alpha_bruteforce(CoeffQuery::new(5, 3, 1)), Err(CoeffError::OddWeight));
        assert_eq!(alpha_bruteforce(CoeffQuery::new(2, 4, 2)), Err(CoeffError::OutOfRange));
        assert_eq!(gamma_bruteforce(CoeffQuery::new(5, 2, 2)), Err(CoeffError::NotGammaCase));
    }

    #[test]
    fn table_entries() {
        assert_eq!(s_repeated_phi(9, 3, 4).to_string(), "phi3");
        assert_eq!(s_repeated_phi(6, 2, 5).to_string(), "phi1");
        assert_eq!(s_repeated_phi(9, 2, 2).to_string(), "phi7");
        assert!(s_repeated_phi(3, 4, 2).is_zero());
    }
}
