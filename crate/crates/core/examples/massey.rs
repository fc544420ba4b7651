//! Canonical witnesses and the elements built from them: φ̃, ω, ψ, A, κ.

use cobordism::algebra::u;
use cobordism::mass::kappa::kappa;
use cobordism::mass::massey::{bracket, MasseyContext};
use cobordism::mass::Complex;
use cobordism::tables::Generators;

fn main() {
    let cx = Complex::default();
    let mc = MasseyContext::new(&cx);
    println!("c(u2,u3)   = {}", mc.c_witness(&u(2), &u(3)).unwrap());
    println!("phit_23    = {}", mc.phi_pair(2, 3).unwrap());
    println!("omega_234  = {}", mc.omega(2, 3, 4).unwrap());
    println!("psi_2^34   = {}", mc.psi([2, 3, 4], [true, false, false]).unwrap());
    println!("A(u1,u2)   = {}", mc.massey_a(&u(1), &u(2)).unwrap());

    let g = Generators::builtin();
    let (phit7, omega1) = (&g.get("phit7").unwrap().value, &g.get("omega1").unwrap().value);
    println!("(phit7, omega1) forbidden: {}", mc.is_forbidden(phit7, omega1).unwrap());
    let k = kappa();
    let b = bracket(phit7, omega1).unwrap();
    println!("kappa has {} terms; a cycle: {}", k.len(), cx.is_cycle(&k).unwrap());
    println!("kappa - <phit7,h0,omega1> is a boundary: {}", cx.is_boundary(&(&k + &b)).unwrap());
}
