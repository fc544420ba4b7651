//! Landweber-Novikov operations on Ray's elements through the Kochman
//! expansion.
//!
//! Usage: cargo run --example operations -- 2,2 9

use cobordism::hopf::{kochman_h, s_on_phi, OpIndex};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let omega: OpIndex = args.first().map_or("2,2", String::as_str).parse().expect("operation index");
    let m: u32 = args.get(1).map_or(Ok(9), |s| s.parse()).expect("integer m");
    println!("S_{{{omega}}} Phi{m} = {}", s_on_phi(&omega, m));

    // The lowest weights of h(Phi_m) with their integer coefficients.
    println!("h(Phi{m}), weight <= 4:");
    for (e, terms) in kochman_h(m, 4) {
        let parts: Vec<String> = terms.iter().map(|(s, c)| format!("{c}*{s}")).collect();
        println!("  {:<10} {}", e.to_monomial_string(), parts.join(" + "));
    }
}
