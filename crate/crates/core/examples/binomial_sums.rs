//! The α and γ sums behind `S_{k,...,k} Φ_n`, next to the closed forms.
//!
//! Usage: cargo run --example binomial_sums -- [n] [k]

use cobordism::binomial::{
    alpha_bruteforce, corollary_closed_form, gamma_bruteforce, s_repeated_phi, CoeffQuery,
    ThreePartVariant,
};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer argument"));
    let n = args.next().unwrap_or(9);
    let k = args.next().unwrap_or(2);
    println!("S_{{{k},...,{k}}} Phi{n}");
    for m in 1..=13 {
        let q = CoeffQuery::new(n, m, k);
        let sum = match (alpha_bruteforce(q), gamma_bruteforce(q)) {
            (Ok(a), _) => format!("alpha = {a}"),
            (_, Ok(g)) => format!("gamma = {g}"),
            (Err(e), _) => e.to_string(),
        };
        let closed = match corollary_closed_form(m, n, k, ThreePartVariant::Corrected) {
            Ok(cf) => cf.to_vector().to_string(),
            Err(e) => format!("({e})"),
        };
        println!("  m={m:<2} {sum:<28} value {:<8} closed form {closed}", s_repeated_phi(n, k, m));
    }
}
