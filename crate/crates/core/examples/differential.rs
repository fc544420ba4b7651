//! The first differential on E1 and the homology of single cells.
//!
//! Usage: cargo run --example differential -- "c{2,3}"

use cobordism::algebra::{parse_poly, TriDegree};
use cobordism::mass::{d1, Complex};

fn main() {
    let cx = Complex::default();
    for text in std::env::args().skip(1).chain(["c5", "c{2,3,4}", "h0*c2 + h1*h2"].map(String::from)) {
        let p = parse_poly(&text).expect("polynomial");
        println!("d1({text}) = {}", d1(&p));
    }
    for (q, s, t) in [(0, 1, 2), (0, 1, 22), (2, 0, 8), (1, 1, 104)] {
        let h = cx.homology(TriDegree::new(q, s, t)).expect("cell within the bound");
        print!("{}", h.to_cell_text());
    }
}
