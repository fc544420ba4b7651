//! Components of the conjugation χ(B) and the coefficient of `b_k^m`.

use cobordism::hopf::{chi_component, OpIndex};
use cobordism::suites::chi_coefficient;

fn main() {
    for (t, w) in [(0, 2), (1, 2), (2, 2), (0, 4)] {
        println!("chi(B)^{t}_{w} = {}", chi_component(t, w));
    }
    let c = chi_component(6, 4);
    println!("coefficient of b2^2 in chi(B)^6_4: {}", c.coefficient(&OpIndex::repeated(2, 2)));
    for n in 3..=6 {
        println!("n={n} m=2 k=2: {:?}", chi_coefficient(n, 2, 2));
    }
}
