//! Checking relations among named elements, in E1 and modulo boundaries.

use cobordism::mass::{check_relation, Complex, RelationMode};
use cobordism::projection::Database;
use cobordism::tables::{builtin_relations, eval_expr, Generators, Scope};

fn main() {
    let cx = Complex::default();
    let db = Database::builtin();
    let generators = Generators::builtin();
    let scope = Scope {
        generators: &generators,
        db: Some(&db),
    };
    for r in builtin_relations().iter().take(12) {
        let lhs = eval_expr(&r.sides[0], &scope).unwrap();
        let rhs = eval_expr(&r.sides[1], &scope).unwrap();
        let verdict = match check_relation(&cx, &lhs, &rhs, RelationMode::UpToBoundary) {
            Ok(v) if v.identical => "identical".to_string(),
            Ok(v) if v.holds => "up to a boundary".to_string(),
            Ok(v) => format!("fails by {}", v.diff),
            Err(e) => e.to_string(),
        };
        println!("{:<60} {verdict}", r.text());
    }
}
