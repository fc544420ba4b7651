//! Formal F₂ combinations of Ray's elements θ₁ and Φᵢ.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PhiSymbol {
    Theta1,
    Phi(u32),
}

impl PhiSymbol {
    /// `Φ₀` is the θ₁ slot.
    pub fn phi(i: u32) -> PhiSymbol {
        if i == 0 {
            PhiSymbol::Theta1
        } else {
            PhiSymbol::Phi(i)
        }
    }

    /// Dimension in MSp_*: 1 for θ₁, 8i − 3 for Φᵢ.
    pub fn dim(&self) -> u32 {
        match *self {
            PhiSymbol::Theta1 => 1,
            PhiSymbol::Phi(i) => 8 * i - 3,
        }
    }
}

impl fmt::Display for PhiSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiSymbol::Theta1 => write!(f, "theta1"),
            PhiSymbol::Phi(i) => write!(f, "phi{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PhiVector {
    terms: BTreeSet<PhiSymbol>,
}

impl PhiVector {
    pub fn zero() -> Self {
        PhiVector::default()
    }

    pub fn single(s: PhiSymbol) -> Self {
        let mut v = PhiVector::zero();
        v.toggle(s);
        v
    }

    pub fn toggle(&mut self, s: PhiSymbol) {
        if !self.terms.remove(&s) {
            self.terms.insert(s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = PhiSymbol> + '_ {
        self.terms.iter().copied()
    }

    pub fn coefficient(&self, s: PhiSymbol) -> bool {
        self.terms.contains(&s)
    }

    /// Parses `0`, `theta1`, `phiN` (with `phi0` read as θ₁) joined by `+`.
    pub fn parse(text: &str) -> Option<PhiVector> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut v = PhiVector::zero();
        if text == "0" {
            return Some(v);
        }
        for part in text.split('+') {
            let s = if part == "theta1" {
                PhiSymbol::Theta1
            } else {
                PhiSymbol::phi(part.strip_prefix("phi")?.parse().ok()?)
            };
            v.toggle(s);
        }
        Some(v)
    }
}

impl fmt::Display for PhiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, s) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
