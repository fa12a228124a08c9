use std::process::{Command, Output};

fn supercone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supercone"))
        .args(args)
        .env_remove("SUPERCONE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn orbits_json() {
    let out = supercone(&["--json", "orbits", "--algebra", "gl:2:2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["orbits"].as_array().unwrap().len(), 6);
}

#[test]
fn atypicality_reports_degree() {
    let out = supercone(&["--json", "atypicality", "--algebra", "gl:2:2", "--weight", "[2,1,-1,-2]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["k"], 2);
}

#[test]
fn variety_checks_pass() {
    let out = supercone(&["--json", "variety", "--algebra", "gl:2:1", "--weight", "[2,1,-1]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["atypicality_k"], 1);
    assert_eq!(v["variety_rank"], 1);
    for key in ["rank_bound", "variety_equality", "sdim_vanishing"] {
        assert_eq!(v["checks"][key], "pass");
    }
}

#[test]
fn certified_reduction_with_case_two_exits_one() {
    // the case-2 step fails the literal minimality clause
    let out = supercone(&["--json", "reduce", "--algebra", "gl:2:1", "--weight", "[2,1,-2]", "--certify"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["certified"], false);
    let plain = supercone(&["reduce", "--algebra", "gl:2:1", "--weight", "[2,1,-2]"]);
    assert_eq!(plain.status.code(), Some(0));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["atypicality", "--algebra", "gl:2:2", "--weight", "[1,2]"][..],
        &["atypicality", "--algebra", "nope", "--weight", "[1]"][..],
        &["variety", "--algebra", "osp:3:2", "--weight", "[1,2]"][..],
        &["verify", "--suite", "no-such-suite"][..],
        &["verify", "--suite", "orbits", "--grid", "99"][..],
    ] {
        assert_eq!(supercone(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = supercone(&["verify", "--suite", "orbits", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
}

#[test]
fn module_build_uses_cache_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_supercone"))
            .args(["--json", "module", "build", "--algebra", "gl:1:1", "--weight", "[1,-1]"])
            .env("SUPERCONE_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let v = json(&first);
    assert!(std::path::Path::new(v["path"].as_str().unwrap()).exists());
    assert_eq!(json(&run()), v);
}
