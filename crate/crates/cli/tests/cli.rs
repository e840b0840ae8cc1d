//! End-to-end checks of the verification driver: exit codes, report formats,
//! determinism, config handling, and the fault-injection hooks.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capelli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn default_all_suite_passes_at_n1() {
    let out = run(&[
        "--suite", "all", "--n", "1", "--kmax", "3", "--series-order", "4",
        "--trunc-degree", "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("overall: pass"), "{text}");
}

#[test]
fn json_report_has_the_expected_shape() {
    let out = run(&["--suite", "rho-hom", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["suite"], "rho-hom");
    assert_eq!(v["params"]["n"], 2);
    assert_eq!(v["overall"], "pass");
    assert!(v["version"].is_string());
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string());
        assert_eq!(c["status"], "pass");
        assert!(c["witness"].is_null());
        assert!(c["ms"].is_u64());
    }
    // canonical ordering: sorted by name
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn corrupted_rho_table_fails_with_witness() {
    let out = run(&[
        "--suite", "rho-hom", "--n", "1", "--format", "json", "--test-hook", "corrupt-rho",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["overall"], "fail");
    let witnessed = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["status"] == "fail" && c["witness"].is_string());
    assert!(witnessed, "a failing check must carry a witness");
}

#[test]
fn unsigned_determinant_hook_fails_centrality_at_n2() {
    let out = run(&["--suite", "capelli", "--n", "2", "--test-hook", "unsigned-det"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["--suite", "rho-hom", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["--unknown-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = [
        "--suite", "uprime", "--n", "1", "--seed", "7", "--format", "json", "--no-timings",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn config_file_provides_defaults_and_flags_override() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.conf");
    std::fs::write(&cfg, "suite=newton\nn=1\nseries-order=3\nformat=json\n").unwrap();
    let out = run(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "newton");
    assert_eq!(v["params"]["series_order"], 3);
    // a flag overrides the file
    let out = run(&["--config", cfg.to_str().unwrap(), "--suite", "diagram"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "diagram");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "--suite", "diagram", "--n", "1", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "diagram");
    std::fs::remove_dir_all(&dir).ok();
}
