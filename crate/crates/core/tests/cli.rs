use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("spawn verify")
}

#[test]
fn passing_suite_exits_zero_with_json_on_stdout() {
    let out = verify(&["brauer", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "brauer");
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn invariants_example_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let report = dir.path().join("report.json");
    std::fs::write(&cfg, r#"{"n": 1, "m": 4, "N": 6}"#).unwrap();
    let out = verify(&["invariants", "--config", cfg.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let dims: Vec<u64> = (0..=4)
        .map(|m| {
            let c = v["checks"]
                .as_array()
                .unwrap()
                .iter()
                .find(|c| c["check"] == format!("invariants/dim/realized/m={m}"))
                .unwrap();
            assert_eq!(c["got"]["graded"], c["got"]["realized"]);
            assert_eq!(c["got"]["hilbert"], c["got"]["realized"]);
            c["got"]["realized"].as_u64().unwrap()
        })
        .collect();
    assert_eq!(dims, [1, 2, 5, 10, 20]);
}

#[test]
fn command_line_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"n": 2, "m": 9}"#).unwrap();
    let out = verify(&["yangian", "--config", cfg.to_str().unwrap(), "--m", "2", "--n", "1", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["m"], 2);
    assert_eq!(v["config"]["n"], 1);
}

#[test]
fn same_config_gives_same_bytes() {
    let a = verify(&["evalfunctor", "--seed", "11", "--quiet"]);
    let b = verify(&["evalfunctor", "--seed", "11", "--quiet"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(verify(&["nonsense"]).status.code(), Some(2));
    assert_eq!(verify(&["brauer", "--field", "prime:4"]).status.code(), Some(2));
    assert_eq!(verify(&["brauer", "--m", "0"]).status.code(), Some(2));
    assert_eq!(verify(&["brauer", "--bogus"]).status.code(), Some(2));
    assert_eq!(verify(&[]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"n": 1, "colour": "red"}"#).unwrap();
    assert_eq!(verify(&["brauer", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(verify(&["brauer", "--config", "/nonexistent/cfg.json"]).status.code(), Some(2));
}

#[test]
fn oversized_config_exits_three_before_work() {
    let out = verify(&["all", "--n", "3", "--m", "9"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert_eq!(verify(&["centralizer", "--N", "7"]).status.code(), Some(3));
}
