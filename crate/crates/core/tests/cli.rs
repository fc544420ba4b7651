use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cobordism"))
        .args(args)
        .env_remove("COBORDISM_DATA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn sop_examples() {
    for (omega, phi, expected) in [("2,2", "9", "phi7"), ("2,2,2,2,2,2,2,2,2", "10", "phi1"), ("99", "2", "0")] {
        let o = run(&["sop", "--omega", omega, "--phi", phi]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), expected);
    }
}

#[test]
fn d1_and_cell() {
    assert_eq!(stdout(&run(&["d1", "h0"])), "0");
    assert_eq!(stdout(&run(&["d1", "c{2,3}"])), "h2*u3 + h3*u2");
    let cell = stdout(&run(&["cell", "0", "1", "2"]));
    assert_eq!(cell, "CELL 0 1 2 | 1 | 1 | 0 | 1\nu1");
}

#[test]
fn check_modes() {
    // h2*u3 + h3*u2 = d1(c5)
    let o = run(&["check", "h2*u3", "h3*u2", "--mode", "up-to-boundary"]);
    assert_eq!(stdout(&o), "up-to-boundary");
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "h2*u3", "h3*u2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["check", "u1*phi3", "u1*phi3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["identical"], true);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_emits_json() {
    let o = run(&["verify", "table9", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "table9");
    assert_eq!(v["totals"]["fail"], 0);
    let item = &v["items"][0];
    for key in ["id", "locus", "verdict", "witness"] {
        assert!(item.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_corollaries_has_no_failures() {
    let o = run(&["verify", "corollaries", "--json", "--n", "12", "--k", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["totals"]["fail"], 0);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_writes_to_file() {
    let path = std::env::temp_dir().join(format!("cobordism-table9-{}.json", std::process::id()));
    let o = run(&["verify", "table9", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "table9");
    let _ = std::fs::remove_file(path);
}

#[test]
fn relation_failures_exit_one() {
    let o = run(&["verify", "relations"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["sop", "--omega", "x", "--phi", "2"]).status.code(), Some(2));
    assert_eq!(run(&["cell", "0", "0", "500"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "table9", "--data", "/nonexistent/cobordism"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_cobordism"))
        .args(["verify", "projections"])
        .env("COBORDISM_DATA", "/nonexistent/cobordism")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn data_directory_flag() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let o = run(&["verify", "table9", "--data", dir]);
    assert_eq!(o.status.code(), Some(0));
}
