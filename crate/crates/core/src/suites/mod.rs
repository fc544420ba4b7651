//! Named verification campaigns and their reports.
//!
//! Every item carries a locus naming the printed claim it checks. Items are
//! evaluated in parallel and reported in a fixed order.

mod corollaries;
mod mass;
mod projections;
mod relations;
mod table9;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::config::{Config, SweepBounds};
use crate::mass::{Complex, Registry};
use crate::projection::Database;
use crate::tables::Generators;

pub use corollaries::{chi_coefficient, suite_corollaries};
pub use mass::{d1_squared_exhaustive, d1_squared_random, suite_mass};
pub use projections::suite_projections;
pub use relations::{suite_relations, RelationOutcome};
pub use table9::{suite_table9, Table9Row, TABLE9_ROWS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    Insufficient,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Insufficient => "insufficient",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Item {
    pub id: String,
    pub locus: String,
    pub verdict: Verdict,
    pub witness: String,
}

impl Item {
    pub fn new(
        id: impl Into<String>,
        locus: impl Into<String>,
        verdict: Verdict,
        witness: impl Into<String>,
    ) -> Self {
        Item {
            id: id.into(),
            locus: locus.into(),
            verdict,
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub na: usize,
    pub insufficient: usize,
}

impl Totals {
    pub fn of(items: &[Item]) -> Self {
        let mut t = Totals::default();
        for i in items {
            match i.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::NotApplicable => t.na += 1,
                Verdict::Insufficient => t.insufficient += 1,
            }
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub started: String,
    pub wall_clock_ms: u64,
    pub items: Vec<Item>,
    pub totals: Totals,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    /// Items whose id starts with `prefix`.
    pub fn group<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Item> + 'a {
        self.items.iter().filter(move |i| i.id.starts_with(prefix))
    }

    /// One line per item, then the totals.
    pub fn to_text(&self) -> String {
        let mut s = format!("suite {}\n", self.suite);
        for i in &self.items {
            s.push_str(&format!("{:<14} {}  [{}]", i.verdict.to_string(), i.id, i.locus));
            if !i.witness.is_empty() {
                s.push_str(&format!("  {}", i.witness));
            }
            s.push('\n');
        }
        let t = self.totals;
        s.push_str(&format!(
            "totals: pass {} fail {} not-applicable {} insufficient {}\n",
            t.pass, t.fail, t.na, t.insufficient
        ));
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Corollaries,
    Table9,
    Mass,
    Relations,
    Projections,
    All,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Corollaries,
        SuiteName::Table9,
        SuiteName::Mass,
        SuiteName::Relations,
        SuiteName::Projections,
        SuiteName::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Corollaries => "corollaries",
            SuiteName::Table9 => "table9",
            SuiteName::Mass => "mass",
            SuiteName::Relations => "relations",
            SuiteName::Projections => "projections",
            SuiteName::All => "all",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Everything a suite reads: the complex, the action database, the printed
/// generators and the sweep bounds.
pub struct SuiteContext {
    pub cx: Complex,
    pub db: Database,
    pub generators: Generators,
    pub bounds: SweepBounds,
}

impl SuiteContext {
    pub fn new(config: &Config, db: Database) -> Self {
        SuiteContext {
            cx: Complex::new(Registry::new(config.t_bound)),
            db,
            generators: Generators::builtin(),
            bounds: config.bounds.clone(),
        }
    }

    /// Default bounds and the built-in data.
    pub fn builtin() -> Self {
        Self::new(&Config::default(), Database::builtin())
    }
}

fn finish(suite: &str, started: String, clock: Instant, items: Vec<Item>) -> SuiteResult {
    SuiteResult {
        suite: suite.to_string(),
        started,
        wall_clock_ms: clock.elapsed().as_millis() as u64,
        totals: Totals::of(&items),
        items,
    }
}

/// Runs a suite. `all` concatenates the others, prefixing each id with its
/// suite name.
pub fn run(name: SuiteName, ctx: &SuiteContext) -> SuiteResult {
    let started = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
    let clock = Instant::now();
    let items = match name {
        SuiteName::Corollaries => suite_corollaries(ctx),
        SuiteName::Table9 => suite_table9(ctx),
        SuiteName::Mass => suite_mass(ctx),
        SuiteName::Relations => suite_relations(ctx),
        SuiteName::Projections => suite_projections(ctx),
        SuiteName::All => SuiteName::ALL[..5]
            .iter()
            .flat_map(|&n| {
                run(n, ctx).items.into_iter().map(move |mut i| {
                    i.id = format!("{n}/{}", i.id);
                    i
                })
            })
            .collect(),
    };
    finish(name.as_str(), started, clock, items)
}
