use cobordism::algebra::{Gen, Poly};
use cobordism::hopf::OpIndex;
use cobordism::mass::Complex;
use cobordism::projection::{fault_injection, verify_steps, Database, LoadError, StepOutcome, Target};

fn omega(s: &str) -> OpIndex {
    s.parse().unwrap()
}

#[test]
fn stored_projections_are_cycles() {
    let db = Database::builtin();
    let cx = Complex::default();
    let mut n = 0;
    for (m, p) in db.projections() {
        assert!(cx.is_cycle(p).unwrap(), "phi{m}");
        n += 1;
    }
    assert!(n >= 10);
}

#[test]
fn printed_steps_close() {
    let db = Database::builtin();
    let reports = verify_steps(&db, &Complex::default());
    let pass = reports.iter().filter(|r| r.verdict == StepOutcome::Pass).count();
    assert_eq!(reports.len(), 103);
    assert!(pass * 100 >= 95 * reports.len(), "{pass}/{}", reports.len());
    for r in reports.iter().filter(|r| r.verdict == StepOutcome::Fail) {
        assert!(!r.diff.is_empty(), "{} has no witness", r.id());
    }
}

#[test]
fn without_records_everything_is_insufficient() {
    let db = Database::builtin().without_records();
    let reports = verify_steps(&db, &Complex::default());
    let nontrivial = reports.iter().filter(|r| r.verdict != StepOutcome::Pass);
    for r in nontrivial {
        assert_eq!(r.verdict, StepOutcome::Insufficient, "{}", r.id());
        assert!(!r.missing.is_empty());
    }
}

#[test]
fn a_corrupted_record_is_detected() {
    let db = Database::builtin();
    let cx = Complex::default();
    let (failing, dependent) = fault_injection(&db, &cx, Target::C(4), &omega("2"), Poly::zero());
    assert!(!failing.is_empty());
    assert!(!dependent.is_empty());
    assert!(failing.iter().all(|id| dependent.contains(id)));
}

#[test]
fn record_degrees_are_checked() {
    let err = Database::from_sources(&[("bad.txt", "S 2 | c4 -> c4\n")]).unwrap_err();
    assert!(matches!(err, LoadError::Degree { .. }), "{err}");
    let ok = Database::from_sources(&[("ok.txt", "S 2 | c4 -> c2\n")]).unwrap();
    assert_eq!(ok.record(Target::C(4), &omega("2")).unwrap().value, Poly::gen(Gen::c(2).unwrap()));
}

#[test]
fn data_directory_matches_builtin() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let loaded = Database::load_dir(&dir).unwrap();
    assert_eq!(loaded.steps().len(), Database::builtin().steps().len());
    assert_eq!(loaded.records().count(), Database::builtin().records().count());
}
