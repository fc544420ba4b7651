//! Runs one verification suite and prints the totals and the non-passing items.
//!
//! Usage: cargo run --release --example suite -- relations

use cobordism::suites::{run, SuiteContext, SuiteName, Verdict};

fn main() {
    let name: SuiteName = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "table9".into())
        .parse()
        .unwrap_or_else(|e| panic!("{e}"));
    let result = run(name, &SuiteContext::builtin());
    for i in result.items.iter().filter(|i| i.verdict != Verdict::Pass) {
        println!("{:<14} {}  [{}]", i.verdict.to_string(), i.id, i.locus);
    }
    println!("{}", serde_json::to_string(&result.totals).unwrap());
}
