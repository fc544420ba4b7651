//! The E₁-term of the modified algebraic spectral sequence and its first
//! differential.
//!
//! `d₁` is determined on generators by
//!
//! * `d₁ h₀ = 0`, `d₁ u_j = 0`, `d₁ h_j = h₀ u_j`;
//! * `d₁ c_n = 0` for even `n` that is not a power of two;
//! * `d₁ c_{i₁…i_q} = Σ_{s≤t} (u_{i_s} h_{i_t} + u_{i_t} h_{i_s}) Π_{r≠s,t} c_{1,i_r}`,
//!   which covers `c_{1,i}` and `c_{i,j}` as the cases `q = 2`;
//!
//! and extended by Leibniz (no signs in characteristic 2).

pub mod complex;
pub mod gf2;
pub mod kappa;
pub mod massey;

use thiserror::Error;

use crate::algebra::{canonical_name, CAlias, Gen, Monomial, Poly, TriDegree};

pub use complex::{check_relation, Complex, Homology, RelationMode, RelationVerdict};

pub const DEFAULT_T_BOUND: u32 = 108;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MassError {
    #[error("generator {0} is not registered under t-bound {1}")]
    Unregistered(Gen, u32),
    #[error("t = {t} exceeds the configured bound {bound}")]
    BoundExceeded { t: u32, bound: u32 },
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("lhs has tridegree {0} but rhs has {1}")]
    DegreeMismatch(TriDegree, TriDegree),
}

/// The generators of E₁ with `t` at most a bound.
#[derive(Debug, Clone)]
pub struct Registry {
    t_bound: u32,
    gens: Vec<Gen>,
}

impl Registry {
    pub fn new(t_bound: u32) -> Self {
        let mut gens = vec![Gen::H0];
        let pow = |i: u32| 2 * ((1u64 << i) - 1);
        for i in (1..32).take_while(|&i| pow(i) <= t_bound as u64) {
            gens.push(Gen::H(i));
        }
        for j in (1..32).take_while(|&j| pow(j) <= t_bound as u64) {
            gens.push(Gen::U(j));
        }
        for n in 2..=t_bound / 4 {
            if let Ok(g) = Gen::c(n) {
                gens.push(g);
            }
        }
        Registry { t_bound, gens }
    }

    pub fn t_bound(&self) -> u32 {
        self.t_bound
    }

    /// Generators in canonical order.
    pub fn generators(&self) -> &[Gen] {
        &self.gens
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.gens.binary_search(&g).is_ok()
    }

    pub fn d1_generator(&self, g: Gen) -> Result<Poly, MassError> {
        if !self.contains(g) {
            return Err(MassError::Unregistered(g, self.t_bound));
        }
        Ok(d1_generator(g))
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::new(DEFAULT_T_BOUND)
    }
}

fn alpha_pair(i: u32, j: u32) -> Poly {
    let m = |a: Gen, b: Gen| Poly::from(Monomial::from_factors([(a, 1), (b, 1)]));
    m(Gen::U(i), Gen::h(j)) + m(Gen::U(j), Gen::h(i))
}

/// `α_{i,j} = u_i h_j + u_j h_i`.
pub fn alpha(i: u32, j: u32) -> Poly {
    alpha_pair(i, j)
}

/// `d₁` on a single generator.
pub fn d1_generator(g: Gen) -> Poly {
    match g {
        Gen::H0 | Gen::U(_) => Poly::zero(),
        Gen::H(j) => Poly::from(Monomial::from_factors([(Gen::H0, 1), (Gen::U(j), 1)])),
        Gen::C(n) => match canonical_name(n) {
            Ok(CAlias::OneI(i)) => alpha_pair(1, i),
            Ok(CAlias::Multi(idx)) => d1_multi(&idx),
            _ => Poly::zero(),
        },
    }
}

fn d1_multi(idx: &[u32]) -> Poly {
    let q = idx.len();
    let mut out = Poly::zero();
    for s in 0..q {
        for t in s..q {
            let rest = Monomial::from_factors(
                (0..q)
                    .filter(|&r| r != s && r != t)
                    .map(|r| (Gen::C(1 << (idx[r] - 1)), 1)),
            );
            out += alpha_pair(idx[s], idx[t]).mul_monomial(&rest);
        }
    }
    out
}

/// `d₁` on a monomial, by Leibniz.
pub fn d1_monomial(m: &Monomial) -> Poly {
    let mut out = Poly::zero();
    for &(g, e) in m.factors() {
        if e % 2 == 0 {
            continue;
        }
        let dg = d1_generator(g);
        if dg.is_zero() {
            continue;
        }
        let rest = m.without_one(g).expect("factor divides");
        out += dg.mul_monomial(&rest);
    }
    out
}

pub fn d1(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for m in p.terms() {
        out += d1_monomial(m);
    }
    out
}

/// The tridegree shift of `d₁`.
pub const D1_SHIFT: TriDegree = TriDegree::new(1, 1, 0);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, h, parse_poly, u};

    #[test]
    fn generator_values() {
        assert_eq!(d1_generator(Gen::C(5)), parse_poly("u2*h3 + u3*h2").unwrap());
        assert_eq!(d1_generator(Gen::H(2)), parse_poly("h0*u2").unwrap());
        assert!(d1_generator(Gen::C(6)).is_zero());
        assert!(d1_generator(Gen::H0).is_zero());
        assert_eq!(d1_generator(Gen::C(4)), alpha(1, 3));
    }

    #[test]
    fn phi3_is_cycle() {
        let p = parse_poly("u1*c5 + u2*c4 + u3*c2").unwrap();
        assert!(d1(&p).is_zero());
    }

    #[test]
    fn squares_are_cycles() {
        assert!(d1(&(c(5) * c(5))).is_zero());
        assert!(d1(&(h(3).square())).is_zero());
    }

    #[test]
    fn c13_three_terms() {
        let want = alpha(3, 4) * c(2) + alpha(2, 4) * c(4) + alpha(2, 3) * c(8);
        assert_eq!(d1_generator(Gen::C(13)), want);
        let _ = u(1);
    }

    #[test]
    fn registry_bound() {
        let r = Registry::default();
        assert!(r.contains(Gen::H(5)) && !r.contains(Gen::H(6)));
        assert!(r.contains(Gen::C(27)) && !r.contains(Gen::C(28)));
        assert!(r.d1_generator(Gen::C(30)).is_err());
    }
}
