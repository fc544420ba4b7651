//! Projections `φ_m` of Ray's elements into E^{0,1,*}, the recorded values
//! `S_ω c_n`, and a Cartan-rule evaluator that checks them against each other.
//!
//! Data files (one record per line, `#` starts a comment):
//!
//! ```text
//! record     := 'S' parts '|' target '->' poly
//! target     := 'c' uint | 'u' uint | 'phi' uint
//! projection := 'PHI' uint '=' poly
//! ```
//!
//! Values and projections may use `phiK` as a factor for an earlier projection.

mod cartan;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::{parse_poly, Gen, Poly, TriDegree};
use crate::hopf::OpIndex;

pub use cartan::{cartan_apply, act_on_generator, Insufficient};
pub use verify::{
    expected_projection, fault_injection, verify_all, verify_projection, verify_steps,
    ProjectionReport, ProjectionVerdict, StepOutcome,
};

/// What an action record acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    C(u32),
    U(u32),
    Phi(u32),
    /// `h_i`, with `h₀` as index 0; never the target of a record.
    H(u32),
}

impl Target {
    pub fn degree(&self) -> TriDegree {
        match *self {
            Target::C(n) => TriDegree::new(0, 0, 4 * n),
            Target::U(j) => Gen::U(j).degree(),
            Target::Phi(m) => TriDegree::new(0, 1, 8 * m - 2),
            Target::H(0) => Gen::H0.degree(),
            Target::H(i) => Gen::H(i).degree(),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::C(n) => write!(f, "c{n}"),
            Target::U(j) => write!(f, "u{j}"),
            Target::Phi(m) => write!(f, "phi{m}"),
            Target::H(i) => write!(f, "h{i}"),
        }
    }
}

/// `S_ω(target) = value`, with its source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionRecord {
    pub omega: OpIndex,
    pub target: Target,
    pub value: Poly,
    pub text: String,
    pub origin: Origin,
}

/// A printed claim `S_ω φ_m = value` to be checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub m: u32,
    pub omega: OpIndex,
    pub expected: Poly,
    pub text: String,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origin {
    pub file: String,
    pub line: usize,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.file, self.line)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("{origin}: {msg}")]
    Parse { origin: Origin, msg: String },
    #[error("{origin}: degree mismatch in `{record}`: expected {want}, value has {got}")]
    Degree {
        origin: Origin,
        record: String,
        want: TriDegree,
        got: TriDegree,
    },
    #[error("{origin}: duplicate record for S_{omega} {target} (first at {first})")]
    Duplicate {
        origin: Origin,
        omega: OpIndex,
        target: Target,
        first: Origin,
    },
    #[error("cannot read {path}: {msg}")]
    Io { path: PathBuf, msg: String },
}

/// The file names read from a data directory. The supplement is optional.
pub const TABLE10_FILE: &str = "table10.txt";
pub const SUPPLEMENT_FILE: &str = "supplement.txt";
pub const PROJECTIONS_FILE: &str = "projections.txt";
pub const STEPS_FILE: &str = "steps.txt";
pub const ALTERNATES_FILE: &str = "alternates.txt";

const BUILTIN_TABLE10: &str = include_str!("../../data/table10.txt");
const BUILTIN_SUPPLEMENT: &str = include_str!("../../data/supplement.txt");
const BUILTIN_PROJECTIONS: &str = include_str!("../../data/projections.txt");
const BUILTIN_STEPS: &str = include_str!("../../data/steps.txt");
const BUILTIN_ALTERNATES: &str = include_str!("../../data/alternates.txt");

/// Immutable after loading.
#[derive(Debug, Clone, Default)]
pub struct Database {
    actions: BTreeMap<(Target, OpIndex), ActionRecord>,
    projections: BTreeMap<u32, Poly>,
    steps: Vec<Step>,
    alternates: Vec<ActionRecord>,
}

impl Database {
    /// The data shipped with the crate.
    pub fn builtin() -> Self {
        Database::from_sources(&[
            (PROJECTIONS_FILE, BUILTIN_PROJECTIONS),
            (TABLE10_FILE, BUILTIN_TABLE10),
            (SUPPLEMENT_FILE, BUILTIN_SUPPLEMENT),
            (STEPS_FILE, BUILTIN_STEPS),
            (ALTERNATES_FILE, BUILTIN_ALTERNATES),
        ])
        .expect("builtin data is well formed")
    }

    /// Reads the data files of `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self, LoadError> {
        let read = |name: &str, required: bool| -> Result<Option<String>, LoadError> {
            let path = dir.join(name);
            match std::fs::read_to_string(&path) {
                Ok(s) => Ok(Some(s)),
                Err(e) if !required && e.kind() == std::io::ErrorKind::NotFound => Ok(None),
                Err(e) => Err(LoadError::Io {
                    path,
                    msg: e.to_string(),
                }),
            }
        };
        let mut files = Vec::new();
        for (name, required) in [
            (PROJECTIONS_FILE, true),
            (TABLE10_FILE, true),
            (SUPPLEMENT_FILE, false),
            (STEPS_FILE, true),
            (ALTERNATES_FILE, false),
        ] {
            if let Some(text) = read(name, required)? {
                files.push((name, text));
            }
        }
        let refs: Vec<(&str, &str)> = files.iter().map(|(n, t)| (*n, t.as_str())).collect();
        Database::from_sources(&refs)
    }

    /// Loads `(file name, contents)` pairs in order; projections must come
    /// before anything that refers to them.
    pub fn from_sources(files: &[(&str, &str)]) -> Result<Self, LoadError> {
        let mut db = Database::default();
        for (name, text) in files {
            db.load_text(name, text)?;
        }
        Ok(db)
    }

    /// Adds the lines of one file. Records from the alternates file are kept
    /// apart and may repeat a primary `(ω, target)`.
    pub fn load_text(&mut self, file: &str, text: &str) -> Result<(), LoadError> {
        let alternate = file.ends_with(ALTERNATES_FILE);
        for (k, raw) in text.lines().enumerate() {
            let origin = Origin {
                file: file.to_string(),
                line: k + 1,
            };
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("PHI") {
                self.load_projection(rest, line, origin)?;
            } else if let Some(rest) = line.strip_prefix('S') {
                self.load_record(rest, line, origin, alternate)?;
            } else {
                return Err(parse_err(origin, "expected `S` or `PHI`"));
            }
        }
        Ok(())
    }

    fn load_projection(&mut self, rest: &str, line: &str, origin: Origin) -> Result<(), LoadError> {
        let (m, rhs) = rest
            .split_once('=')
            .ok_or_else(|| parse_err(origin.clone(), "expected `=`"))?;
        let m: u32 = m
            .trim()
            .parse()
            .map_err(|_| parse_err(origin.clone(), "bad projection index"))?;
        if m == 0 {
            return Err(parse_err(origin, "projection index must be positive"));
        }
        let value = self
            .parse_value(rhs)
            .map_err(|msg| parse_err(origin.clone(), msg))?;
        let want = Target::Phi(m).degree();
        check_degree(&value, want, line, &origin)?;
        if self.projections.insert(m, value).is_some() {
            return Err(parse_err(origin, format!("phi{m} defined twice")));
        }
        Ok(())
    }

    fn load_record(
        &mut self,
        rest: &str,
        line: &str,
        origin: Origin,
        alternate: bool,
    ) -> Result<(), LoadError> {
        let (parts, rest) = rest
            .split_once('|')
            .ok_or_else(|| parse_err(origin.clone(), "expected `|`"))?;
        let (target, value) = rest
            .split_once("->")
            .ok_or_else(|| parse_err(origin.clone(), "expected `->`"))?;
        let omega = parse_parts(parts)
            .ok_or_else(|| parse_err(origin.clone(), format!("bad part list `{}`", parts.trim())))?;
        let target = parse_target(target.trim()).ok_or_else(|| {
            parse_err(origin.clone(), format!("bad target `{}`", target.trim()))
        })?;
        let value = self
            .parse_value(value)
            .map_err(|msg| parse_err(origin.clone(), msg))?;
        let tdeg = target.degree();
        let shift = 4 * omega.weight();
        if !value.is_zero() {
            let want = match tdeg.t.checked_sub(shift) {
                Some(t) => TriDegree::new(tdeg.q, tdeg.s, t),
                None => {
                    return Err(LoadError::Degree {
                        origin,
                        record: line.to_string(),
                        want: tdeg,
                        got: value.degree().unwrap_or_default(),
                    })
                }
            };
            check_degree(&value, want, line, &origin)?;
        }
        if let Target::Phi(m) = target {
            self.steps.push(Step {
                m,
                omega,
                expected: value,
                text: line.to_string(),
                origin,
            });
            return Ok(());
        }
        let record = ActionRecord {
            omega: omega.clone(),
            target,
            value,
            text: line.to_string(),
            origin: origin.clone(),
        };
        if alternate {
            self.alternates.push(record);
            return Ok(());
        }
        let key = (target, omega.clone());
        if let Some(first) = self.actions.get(&key) {
            return Err(LoadError::Duplicate {
                origin,
                omega,
                target,
                first: first.origin.clone(),
            });
        }
        self.actions.insert(key, record);
        Ok(())
    }

    /// Parses a polynomial whose terms may contain one `phiK` factor.
    fn parse_value(&self, text: &str) -> Result<Poly, String> {
        let text = text.trim();
        if !text.contains("phi") {
            return parse_poly(text).map_err(|e| e.to_string());
        }
        let mut out = Poly::zero();
        for term in text.split('+') {
            let mut phi = Poly::one();
            let mut rest = Vec::new();
            for f in term.split('*').map(str::trim) {
                if let Some(k) = f.strip_prefix("phi") {
                    let k: u32 = k.parse().map_err(|_| format!("bad factor `{f}`"))?;
                    let p = self
                        .projections
                        .get(&k)
                        .ok_or_else(|| format!("phi{k} used before its definition"))?;
                    phi = &phi * p;
                } else {
                    rest.push(f);
                }
            }
            let rest = if rest.is_empty() {
                Poly::one()
            } else {
                parse_poly(&rest.join("*")).map_err(|e| e.to_string())?
            };
            out += &phi * &rest;
        }
        Ok(out)
    }

    pub fn projection(&self, m: u32) -> Option<&Poly> {
        self.projections.get(&m)
    }

    pub fn projections(&self) -> impl Iterator<Item = (u32, &Poly)> {
        self.projections.iter().map(|(&m, p)| (m, p))
    }

    pub fn record(&self, target: Target, omega: &OpIndex) -> Option<&ActionRecord> {
        self.actions.get(&(target, omega.clone()))
    }

    pub fn records(&self) -> impl Iterator<Item = &ActionRecord> {
        self.actions.values()
    }

    pub fn alternates(&self) -> &[ActionRecord] {
        &self.alternates
    }

    /// A copy with `r` in place of the primary record for its `(ω, target)`.
    pub fn with_record(&self, r: &ActionRecord) -> Database {
        let mut db = self.clone();
        db.actions.insert((r.target, r.omega.clone()), r.clone());
        db
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty() && self.projections.is_empty() && self.steps.is_empty()
    }

    /// A copy with one record's value replaced.
    pub fn with_record_value(&self, target: Target, omega: &OpIndex, value: Poly) -> Database {
        let mut db = self.clone();
        if let Some(r) = db.actions.get_mut(&(target, omega.clone())) {
            r.value = value;
        }
        db
    }

    /// A copy without one record.
    pub fn without_record(&self, target: Target, omega: &OpIndex) -> Database {
        let mut db = self.clone();
        db.actions.remove(&(target, omega.clone()));
        db
    }

    /// A copy keeping only the projections and steps.
    pub fn without_records(&self) -> Database {
        Database {
            actions: BTreeMap::new(),
            ..self.clone()
        }
    }
}

fn parse_err(origin: Origin, msg: impl Into<String>) -> LoadError {
    LoadError::Parse {
        origin,
        msg: msg.into(),
    }
}

/// `k₁,k₂,…` with every part positive.
fn parse_parts(s: &str) -> Option<OpIndex> {
    let parts: Option<Vec<u32>> = s
        .split(',')
        .map(|p| p.trim().parse().ok().filter(|&k| k > 0))
        .collect();
    Some(OpIndex::from_parts(&parts?))
}

fn parse_target(s: &str) -> Option<Target> {
    if let Some(k) = s.strip_prefix("phi") {
        return k.parse().ok().filter(|&m| m > 0).map(Target::Phi);
    }
    match crate::algebra::parse_gen(s).ok()? {
        Gen::C(n) => Some(Target::C(n)),
        Gen::U(j) => Some(Target::U(j)),
        _ => None,
    }
}

fn check_degree(value: &Poly, want: TriDegree, line: &str, origin: &Origin) -> Result<(), LoadError> {
    if value.is_zero() {
        return Ok(());
    }
    match value.degree() {
        Some(got) if got == want => Ok(()),
        got => Err(LoadError::Degree {
            origin: origin.clone(),
            record: line.to_string(),
            want,
            got: got.unwrap_or_default(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_grammar() {
        let mut db = Database::default();
        db.load_text("t", "S 2 | c4 -> c2\nS 6 | c10 -> 0  # zero\n").unwrap();
        assert_eq!(db.records().count(), 2);
        let err = db.load_text("t", "S 2 | c4 -> c4").unwrap_err();
        assert!(matches!(err, LoadError::Degree { .. }), "{err}");
        let err = db.load_text("t", "S 2 | c4 -> 0").unwrap_err();
        assert!(matches!(err, LoadError::Duplicate { .. }));
        let err = db.load_text("t", "\nS 2 c4 -> 0").unwrap_err();
        assert!(err.to_string().starts_with("t:2:"));
    }

    #[test]
    fn builtin_loads() {
        let db = Database::builtin();
        assert_eq!(db.projections().count(), 10);
        assert!(db.records().count() >= 545);
        assert!(db.steps().len() > 100);
        assert_eq!(
            db.projection(3).unwrap(),
            &parse_poly("u1*c5 + u2*c4 + u3*c2").unwrap()
        );
    }
}
