//! The class `κ ∈ E^{1,1,104}` and the `d₁` identities around it.

use super::{alpha, d1};
use crate::algebra::{c, h, Poly};

/// The printed expansion of `κ`, with `α_{i,j} = u_i h_j + u_j h_i`.
pub fn kappa() -> Poly {
    (alpha(1, 2) * c(11) + alpha(1, 3) * c(9) + alpha(1, 4) * c(5)) * c(13)
        + (alpha(2, 3) * c(2) * c(8) + alpha(2, 4) * c(2) * c(4)) * c(11)
        + (alpha(2, 3) * c(4) * c(8) + alpha(3, 4) * c(2) * c(4)) * c(9)
        + (alpha(2, 4) * c(4) * c(8) + alpha(3, 4) * c(2) * c(8)) * c(5)
}

/// `(c₂c₁₁ + c₄c₉ + c₅c₈)c₁₃`.
pub fn first_preimage() -> Poly {
    (c(2) * c(11) + c(4) * c(9) + c(5) * c(8)) * c(13)
}

/// The printed value of `d₁` on [`first_preimage`]:
/// `κ + α₃₄c₁₁c₂² + α₂₄c₉c₄² + α₂₃c₅c₈²`.
pub fn first_image_printed() -> Poly {
    kappa()
        + alpha(3, 4) * c(11) * c(2).square()
        + alpha(2, 4) * c(9) * c(4).square()
        + alpha(2, 3) * c(5) * c(8).square()
}

/// The printed value plus the term `c₁₃ d₁(c₁₃)` it omits.
pub fn first_image_corrected() -> Poly {
    first_image_printed() + c(13) * d1(&c(13))
}

/// The twelve-term element whose `d₁` is `h₀κ`.
pub fn h0_kappa_preimage() -> Poly {
    let t = |a: u32, b: u32, cs: &[u32]| cs.iter().fold(h(a) * h(b), |acc, &n| acc * c(n));
    t(1, 2, &[11, 13])
        + t(2, 3, &[2, 8, 11])
        + t(2, 4, &[2, 4, 11])
        + t(1, 3, &[9, 13])
        + t(2, 3, &[4, 8, 9])
        + t(3, 4, &[2, 4, 9])
        + t(1, 4, &[5, 13])
        + t(2, 4, &[4, 5, 8])
        + t(3, 4, &[2, 5, 8])
        + t(2, 2, &[4, 8, 11])
        + t(3, 3, &[2, 8, 9])
        + t(4, 4, &[2, 4, 5])
}

/// The three elements `X` with `d₁X = κ + ⟨u_a, h₀, ψ⟩`, as `(X, a, ψ name)`.
pub fn bracket_preimages() -> Vec<(Poly, u32, &'static str)> {
    vec![
        ((c(5) * c(8) + c(4) * c(9)) * c(13), 2, "psi7"),
        ((c(5) * c(8) + c(2) * c(11)) * c(13), 3, "psi5"),
        ((c(4) * c(9) + c(2) * c(11)) * c(13), 4, "psi3"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TriDegree;

    #[test]
    fn degree_and_cycle() {
        let k = kappa();
        assert_eq!(k.len(), 18);
        assert_eq!(k.degree(), Some(TriDegree::new(1, 1, 104)));
        assert!(d1(&k).is_zero());
    }

    #[test]
    fn identities() {
        assert_eq!(d1(&h0_kappa_preimage()), h(0) * kappa());
        assert_ne!(d1(&first_preimage()), first_image_printed());
        assert_eq!(d1(&first_preimage()), first_image_corrected());
    }
}
