//! End-to-end checks of the `muntz` binary: deterministic artifacts,
//! config-file resolution, output formats, and the exit-code contract.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_muntz"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("muntz-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process terminated by signal")
}

#[test]
fn check_lambda_artifact_is_deterministic() {
    let dir = scratch("det");
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for p in [&a, &b] {
        let out = run(&[
            "check-lambda",
            "--rule",
            "power",
            "--p",
            "2",
            "--N",
            "30",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    }
    let ta = fs::read(&a).unwrap();
    let tb = fs::read(&b).unwrap();
    assert_eq!(ta, tb, "reruns must produce byte-identical artifacts");

    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    let alpha1 = v["alpha1"].as_f64().unwrap();
    assert!((alpha1 - 1.6449).abs() < 1e-3, "alpha1 = {alpha1}");
    assert_eq!(v["config"]["rule"], "power", "resolved config must be embedded");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = scratch("cfg");
    let cfg = dir.join("cfg.json");
    fs::write(&cfg, r#"{"rule":"power","p":2.0,"N":10}"#).unwrap();

    // value from the file
    let out = run(&["--config", cfg.to_str().unwrap(), "check-lambda"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["p"].as_f64().unwrap(), 2.0);

    // explicit flag overrides the file
    let out = run(&["--config", cfg.to_str().unwrap(), "check-lambda", "--p", "3"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["p"].as_f64().unwrap(), 3.0);
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = scratch("badcfg");
    let cfg = dir.join("cfg.json");
    fs::write(&cfg, r#"{"rule":"power","p":2.0,"N":10,"bogus":1}"#).unwrap();
    let out = run(&["--config", cfg.to_str().unwrap(), "check-lambda"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn invalid_usage_exits_2() {
    let out = run(&["lebesgue", "--no-such-flag"]);
    assert_eq!(code(&out), 2);
    let out = run(&["no-such-command"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn accuracy_failure_exits_3() {
    // truncation far too small for the certified tail
    let out = run(&["asymptotic", "--alpha", "0.5", "--x", "0.005", "--K", "150"]);
    assert_eq!(code(&out), 3, "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn missing_input_exits_4() {
    let out = run(&["basis-validate", "--in", "/nonexistent/steps.json"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn csv_output_carries_config_header() {
    let out = run(&[
        "lebesgue",
        "--method",
        "fejer",
        "--n",
        "1..4",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().next().unwrap().starts_with('#'));
    assert!(text.lines().any(|l| l.starts_with("n,")));
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .collect();
    assert_eq!(rows.len(), 5, "header plus one row per order");
}

#[test]
fn basis_build_then_validate_round_trips() {
    let dir = scratch("basis");
    let steps = dir.join("steps.json");
    let out = run(&[
        "basis-build",
        "--rule",
        "geometric",
        "--base",
        "2",
        "--N",
        "6",
        "--degrees",
        "2,4,8,16",
        "--out",
        steps.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let sys: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&steps).unwrap()).unwrap();
    assert!(sys["rows"].as_array().unwrap().len() >= 4);

    let out = run(&[
        "basis-validate",
        "--in",
        steps.to_str().unwrap(),
        "--L",
        "4",
        "--probes",
        "10",
        "--grid-m",
        "128",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["m_strictly_increasing"], true);
    assert!(v["report"]["inclination_floor"].as_f64().unwrap() > 0.0);
}
