use supercone::toolkit::{export_report, run_suite, RunConfig, Suite};

#[test]
fn reports_are_deterministic_across_job_counts() {
    let mut config = RunConfig::for_suite(Suite::FiberLaws);
    config.pairs = 6;
    config.jobs = 1;
    let a = run_suite(&config).unwrap();
    config.jobs = 3;
    let b = run_suite(&config).unwrap();
    assert!(a.passed);
    assert_eq!(a.deterministic_json().unwrap(), b.deterministic_json().unwrap());
}

#[test]
fn seed_changes_the_fiber_law_sample() {
    let mut config = RunConfig::for_suite(Suite::FiberLaws);
    config.pairs = 6;
    let a = run_suite(&config).unwrap();
    config.seed += 1;
    let b = run_suite(&config).unwrap();
    assert_ne!(a.deterministic_json().unwrap(), b.deterministic_json().unwrap());
}

#[test]
fn exported_report_parses_back() {
    let report = run_suite(&RunConfig::for_suite(Suite::Centralizer)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    export_report(&report, &path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["matrix"].as_object().unwrap().len(), report.matrix.len());
    assert_eq!(report.exit_code(), 0);
}
