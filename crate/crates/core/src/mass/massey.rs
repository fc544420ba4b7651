//! Matrix Massey products in E₁ and the named elements of the `E^{0,1,*}` cell.
//!
//! For `ξ = Σ u_i c̃_i` the element `h_ξ = Σ h_i c̃_i` satisfies
//! `d₁ h_ξ = h₀ ξ`. A witness `c_{ξ,η}` is any solution of
//! `d₁ c_{ξ,η} = ξ h_η + η h_ξ`; the pair is forbidden when none exists. Then
//!
//! ```text
//! A_{ξ,η}   = h₀ c_{ξ,η} + h_ξ h_η        (A_{ξ,ξ} = h_ξ²)
//! F_{ξ,ζ,η} = ξ c_{η,ζ} + ζ c_{ξ,η} + η c_{ξ,ζ}
//! ```

use std::collections::HashMap;
use std::sync::RwLock;

use thiserror::Error;

use super::{d1, Complex, MassError};
use crate::algebra::{c, h, resolve_alias, u, Gen, Monomial, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MasseyError {
    #[error("{0} is not of the form Σ u_i c̃_i")]
    NotInUCell(Poly),
    #[error("forbidden pair ({xi}, {eta}): ξh_η + ηh_ξ is not a boundary")]
    Forbidden { xi: Poly, eta: Poly },
    #[error("witness for ({xi}, {eta}) fails d1(c) = ξh_η + ηh_ξ")]
    WitnessInvalid { xi: Poly, eta: Poly },
    #[error(transparent)]
    Mass(#[from] MassError),
}

/// `h_ξ`: replace the single `u_i` of each term by `h_i`.
pub fn h_witness(xi: &Poly) -> Result<Poly, MasseyError> {
    let mut out = Poly::zero();
    for m in xi.terms() {
        let mut us = m.factors().iter().filter(|(g, _)| matches!(g, Gen::U(_)));
        let (Some(&(Gen::U(i), 1)), None) = (us.next(), us.next()) else {
            return Err(MasseyError::NotInUCell(xi.clone()));
        };
        if m.factors().iter().any(|(g, _)| matches!(g, Gen::H0 | Gen::H(_))) {
            return Err(MasseyError::NotInUCell(xi.clone()));
        }
        let rest = m.without_one(Gen::U(i)).expect("u_i divides");
        out.toggle(rest.mul(&Monomial::gen(Gen::h(i))));
    }
    Ok(out)
}

/// `⟨ξ, h₀, η⟩ = ξ h_η + η h_ξ`.
pub fn bracket(xi: &Poly, eta: &Poly) -> Result<Poly, MasseyError> {
    Ok(xi * &h_witness(eta)? + eta * &h_witness(xi)?)
}

fn single_u(p: &Poly) -> Option<u32> {
    match p.terms().collect::<Vec<_>>()[..] {
        [m] => match m.factors() {
            [(Gen::U(i), 1)] => Some(*i),
            _ => None,
        },
        _ => None,
    }
}

/// Witness cache plus any designated witnesses. Shares one [`Complex`].
#[derive(Debug)]
pub struct MasseyContext<'a> {
    cx: &'a Complex,
    designated: HashMap<(Poly, Poly), Poly>,
    cache: RwLock<HashMap<(Poly, Poly), Result<Poly, MasseyError>>>,
}

fn key(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl<'a> MasseyContext<'a> {
    pub fn new(cx: &'a Complex) -> Self {
        MasseyContext {
            cx,
            designated: HashMap::new(),
            cache: RwLock::default(),
        }
    }

    pub fn complex(&self) -> &Complex {
        self.cx
    }

    /// Fixes `c_{ξ,η}`; checked against `d₁` when first used.
    pub fn designate(&mut self, xi: &Poly, eta: &Poly, witness: Poly) {
        self.designated.insert(key(xi, eta), witness);
        self.cache.write().unwrap().clear();
    }

    fn compute_witness(&self, xi: &Poly, eta: &Poly) -> Result<Poly, MasseyError> {
        if xi == eta {
            return Ok(Poly::zero());
        }
        let target = bracket(xi, eta)?;
        let w = if let Some(w) = self.designated.get(&key(xi, eta)) {
            w.clone()
        } else if let (Some(i), Some(j)) = (single_u(xi), single_u(eta)) {
            let (i, j) = (i.min(j), i.max(j));
            let n = resolve_alias(&[i, j]).expect("distinct u indices");
            c(n)
        } else {
            match self.cx.preimage_normal_form(&target)? {
                Some(w) => w,
                None => {
                    return Err(MasseyError::Forbidden {
                        xi: xi.clone(),
                        eta: eta.clone(),
                    })
                }
            }
        };
        if d1(&w) != target {
            return Err(MasseyError::WitnessInvalid {
                xi: xi.clone(),
                eta: eta.clone(),
            });
        }
        Ok(w)
    }

    /// `c_{ξ,η}`.
    pub fn c_witness(&self, xi: &Poly, eta: &Poly) -> Result<Poly, MasseyError> {
        let k = key(xi, eta);
        if let Some(r) = self.cache.read().unwrap().get(&k) {
            return r.clone();
        }
        let r = self.compute_witness(xi, eta);
        self.cache.write().unwrap().insert(k, r.clone());
        r
    }

    pub fn is_forbidden(&self, xi: &Poly, eta: &Poly) -> Result<bool, MasseyError> {
        match self.c_witness(xi, eta) {
            Ok(_) => Ok(false),
            Err(MasseyError::Forbidden { .. }) => Ok(true),
            Err(e) => Err(e),
        }
    }

    /// `A_{ξ,η}`.
    pub fn massey_a(&self, xi: &Poly, eta: &Poly) -> Result<Poly, MasseyError> {
        if xi == eta {
            return Ok(h_witness(xi)?.square());
        }
        let cw = self.c_witness(xi, eta)?;
        Ok(&h(0) * &cw + h_witness(xi)? * h_witness(eta)?)
    }

    /// `F_{ξ,ζ,η}`.
    pub fn massey_f(&self, xi: &Poly, zeta: &Poly, eta: &Poly) -> Result<Poly, MasseyError> {
        Ok(xi * &self.c_witness(eta, zeta)?
            + zeta * &self.c_witness(xi, eta)?
            + eta * &self.c_witness(xi, zeta)?)
    }

    /// `φ̃_{i,j} = F_{u₁,u_i,u_j}`.
    pub fn phi_pair(&self, i: u32, j: u32) -> Result<Poly, MasseyError> {
        self.massey_f(&u(1), &u(i), &u(j))
    }

    /// `ω_{ijk} = F_{u_i,u_j,u_k}`.
    pub fn omega(&self, i: u32, j: u32, k: u32) -> Result<Poly, MasseyError> {
        self.massey_f(&u(i), &u(j), &u(k))
    }

    /// `ψ` with the hatted indices of `(i, j, k)` marked by `hats`.
    ///
    /// One hat on `i` gives `F_{u₁,u_i,ω_{ijk}}`; two hats on `i, j` give
    /// `F_{u₁,φ̃_{ij},ω_{ijk}}`.
    pub fn psi(&self, idx: [u32; 3], hats: [bool; 3]) -> Result<Poly, MasseyError> {
        let om = self.omega(idx[0], idx[1], idx[2])?;
        let hatted: Vec<u32> = (0..3).filter(|&r| hats[r]).map(|r| idx[r]).collect();
        let mid = match hatted[..] {
            [a] => u(a),
            [a, b] => self.phi_pair(a, b)?,
            _ => return Err(MasseyError::NotInUCell(om)),
        };
        self.massey_f(&u(1), &mid, &om)
    }
}

/// `c_{1,i}`.
pub fn c1(i: u32) -> Poly {
    c(1 << (i - 1))
}

/// `c_{i,j}` or `c_{i,j,k}` by subscript list.
pub fn c_alias(idx: &[u32]) -> Poly {
    c(resolve_alias(idx).expect("valid alias"))
}

/// `φ̃_{ijk} = u₁c_{ijk} + u_i c_{1j}c_{1k} + u_j c_{1i}c_{1k} + u_k c_{1i}c_{1j}`.
pub fn phi_triple(i: u32, j: u32, k: u32) -> Poly {
    u(1) * c_alias(&[i, j, k])
        + u(i) * c1(j) * c1(k)
        + u(j) * c1(i) * c1(k)
        + u(k) * c1(i) * c1(j)
}

/// The printed witness `c_{u_i,φ̃_{jk}} = c_{ijk} + c_{1,i}c_{jk}`.
pub fn witness_u_phi(i: u32, j: u32, k: u32) -> Poly {
    let mut s = [i, j, k];
    s.sort();
    c_alias(&s) + c1(i) * c_alias(&[j.min(k), j.max(k)])
}

/// The printed witness `c_{u₁,ω_{ijk}} = c_{ijk} + c_{1i}c_{jk} + c_{1j}c_{ik} + c_{1k}c_{ij}`.
pub fn witness_u1_omega(i: u32, j: u32, k: u32) -> Poly {
    c_alias(&[i, j, k])
        + c1(i) * c_alias(&[j, k])
        + c1(j) * c_alias(&[i, k])
        + c1(k) * c_alias(&[i, j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn phi3_is_f() {
        let cx = Complex::default();
        let mc = MasseyContext::new(&cx);
        let f = mc.massey_f(&u(1), &u(2), &u(3)).unwrap();
        assert_eq!(f, parse_poly("u1*c5 + u2*c4 + u3*c2").unwrap());
    }

    #[test]
    fn a_on_diagonal() {
        let cx = Complex::default();
        let mc = MasseyContext::new(&cx);
        assert_eq!(mc.massey_a(&u(1), &u(1)).unwrap(), parse_poly("h1^2").unwrap());
        assert_eq!(
            mc.massey_a(&u(1), &u(2)).unwrap(),
            parse_poly("h0*c2 + h1*h2").unwrap()
        );
    }

    #[test]
    fn h_witness_shape() {
        let p = parse_poly("u1*c5 + u2*c4").unwrap();
        assert_eq!(h_witness(&p).unwrap(), parse_poly("h1*c5 + h2*c4").unwrap());
        assert!(h_witness(&parse_poly("u1*u2").unwrap()).is_err());
    }
}
