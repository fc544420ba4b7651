//! Closing the printed steps `S_ω φ_m` against the recorded actions.
//!
//! Usage: cargo run --example projections -- [data dir]

use cobordism::mass::Complex;
use cobordism::projection::{cartan_apply, verify_steps, Database, StepOutcome};

fn main() {
    let db = match std::env::args().nth(1) {
        Some(dir) => Database::load_dir(dir.as_ref()).expect("data directory"),
        None => Database::builtin(),
    };
    let cx = Complex::default();
    let phi3 = db.projection(3).expect("phi3 is stored");
    println!("phi3 = {phi3}");
    println!("S_{{2}} phi3 = {}", cartan_apply(&"2".parse().unwrap(), phi3, &db).unwrap());

    let reports = verify_steps(&db, &cx);
    let mut tally = [0usize; 3];
    for r in &reports {
        let i = match r.verdict {
            StepOutcome::Pass => 0,
            StepOutcome::Fail => 1,
            StepOutcome::Insufficient => 2,
        };
        tally[i] += 1;
        if r.verdict != StepOutcome::Pass {
            println!("{:?} {} [{}] {}", r.verdict, r.id(), r.source, r.diff);
        }
    }
    println!("pass {} fail {} insufficient {}", tally[0], tally[1], tally[2]);
}
