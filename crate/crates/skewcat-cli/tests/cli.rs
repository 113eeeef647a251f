use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use skewcat_cli::{check, CheckOptions, FixtureDoc, ReportDoc};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewcat"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const SMALL: &str = r#"{
  "name": "small",
  "backend": { "kind": "finset" },
  "structure": { "kind": "dot", "r": ["0", "1"] },
  "universe": { "sets": 2, "em_max": 1, "algebra_max": 1, "seed": 3 },
  "suites": ["smc"]
}"#;

#[test]
fn validate_accepts_bundled_fixtures() {
    for name in ["cartesian", "dot1", "dot2", "acu-arrow", "rank1-monoid", "dim-bound-counterexample"] {
        let o = bin().arg("validate").arg(fixture(name)).output().unwrap();
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let neg = write(dir.path(), "neg.json", &SMALL.replace(r#""seed": 3"#, r#""seed": 3, "caps": { "max_set": -1 }"#));
    let o = bin().arg("validate").arg(&neg).output().unwrap();
    assert_eq!(code(&o), 2);

    let unknown = write(dir.path(), "unknown.json", &SMALL.replace(r#"["smc"]"#, r#"["smc", "nosuch"]"#));
    let o = bin().arg("check").arg(&unknown).output().unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch"));

    let extra = write(dir.path(), "extra.json", &SMALL.replace(r#""name""#, r#""colour": 1, "name""#));
    assert_eq!(code(&bin().arg("validate").arg(&extra).output().unwrap()), 2);

    let o = bin().arg("check").arg(fixture("dot1")).args(["--suite", "nosuch"]).output().unwrap();
    assert_eq!(code(&o), 2);

    assert_eq!(code(&bin().arg("validate").arg(dir.path().join("missing.json")).output().unwrap()), 2);
    assert_eq!(code(&bin().args(["demo", "nope"]).current_dir(dir.path()).output().unwrap()), 2);
}

#[test]
fn passing_fixture_exits_zero_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "small.json", SMALL);
    let out = dir.path().join("r.json");
    let o = bin().arg("check").arg(&f).arg("--out").arg(&out).args(["--jobs", "2", "--seed", "11"]).output().unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let r: ReportDoc = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r.summary.failed, 0);
    assert_eq!(r.environment.seed, 11);
    assert!(r.summary.checks > 0);
}

#[test]
fn broken_demo_fails_and_its_witnesses_replay() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin().args(["demo", "broken-gamma"]).current_dir(dir.path()).output().unwrap();
    assert_eq!(code(&o), 1);
    let fx = dir.path().join("broken-gamma.json");
    let rep = dir.path().join("broken-gamma.report.json");
    assert!(fx.exists() && rep.exists());
    let r: ReportDoc = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert!(!r.witnesses().is_empty());

    let o = bin().arg("check").arg(&fx).arg("--replay-witness").arg(&rep).output().unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));

    // Against the unmutated structure nothing reproduces.
    let mut clean: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&fx).unwrap()).unwrap();
    clean.as_object_mut().unwrap().remove("mutations");
    let clean = write(dir.path(), "clean.json", &clean.to_string());
    let o = bin().arg("check").arg(&clean).arg("--replay-witness").arg(&rep).output().unwrap();
    assert_eq!(code(&o), 1);
}

#[test]
fn dim_bound_demo_fails() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin().args(["demo", "dim-bound-counterexample"]).current_dir(dir.path()).output().unwrap();
    assert_eq!(code(&o), 1);
}

#[test]
fn reports_are_deterministic() {
    let fx = FixtureDoc::load(&fixture("dot1")).unwrap();
    let a = check(&fx, &CheckOptions::default()).unwrap().without_timing();
    let b = check(&fx, &CheckOptions { jobs: Some(3), ..Default::default() }).unwrap().without_timing();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn suite_option_restricts_the_run() {
    let fx = FixtureDoc::load(&fixture("dot1")).unwrap();
    let r = check(&fx, &CheckOptions { suites: vec!["smc".into(), "em".into()], ..Default::default() }).unwrap();
    let names: Vec<&str> = r.suites.iter().map(|s| s.suite.as_str()).collect();
    assert_eq!(names, ["smc", "em"]);
}

#[test]
fn custom_tables_act_as_mutations() {
    let text = r#"{
      "name": "custom",
      "backend": { "kind": "finset" },
      "structure": { "kind": "custom", "r": ["0", "1"],
        "tables": [{ "family": "eps", "at": ["S2"], "entries": [["([a,a],1)", "b"]] }] },
      "universe": { "sets": 3, "em_max": 2, "algebra_max": 2, "seed": 7 },
      "suites": ["smc"]
    }"#;
    let fx = FixtureDoc::parse(text).unwrap();
    let r = check(&fx, &CheckOptions::default()).unwrap();
    assert_eq!(r.exit_code(), 1);

    let plain = FixtureDoc::parse(&text.replace(r#"[["([a,a],1)", "b"]]"#, "[]")).unwrap();
    assert_eq!(check(&plain, &CheckOptions::default()).unwrap().exit_code(), 0);

    let bad = text.replace("\"eps\"", "\"nosuch\"");
    assert!(FixtureDoc::parse(&bad).is_err());
}
