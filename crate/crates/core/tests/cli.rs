use std::process::{Command, Output};

fn kstructure(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kstructure"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn e8_basic_dimensions() {
    let out = kstructure(&["dims", "--what", "basic", "--algebra", "E8", "-L", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["algebra"], "E8");
    assert_eq!(json["cutoffs"]["loop_cutoff"], 2);
    let table = json["tables"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["name"] == "basic_graded_dims")
        .unwrap();
    let dims: Vec<i64> = table["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[1].as_i64().unwrap())
        .collect();
    assert_eq!(dims, [1, 248, 4124]);
    assert_eq!(json["diagnostics"]["truncated_terms"], 0);
}

#[test]
fn extended_suite_passes_on_a1() {
    let out = kstructure(&[
        "verify",
        "--suite",
        "extended",
        "--algebra",
        "A1",
        "-N",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("suites,extended,"));
    assert!(!stdout(&out).contains("false"));
}

#[test]
fn level_zero_kills_odd_state() {
    let out = kstructure(&[
        "project",
        "--algebra",
        "A1",
        "-N",
        "0",
        "--state",
        "e[0]*h1[-1]",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[projection]"));
    assert!(
        text.contains("in_kernel  true") || text.contains("in_kernel true"),
        "{text}"
    );
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--algebra",
        "A2",
        "-N",
        "1",
        "--seed",
        "7",
    ];
    let first = kstructure(&args);
    let second = kstructure(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("kstructure-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("info.json");
    let out = kstructure(&["info", "--algebra", "D4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let inline = kstructure(&["info", "--algebra", "D4"]);
    assert_eq!(std::fs::read(&path).unwrap(), inline.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["project", "--state", "e[1,0]*"][..],
        &["dims", "--what", "everything"],
        &["info", "--algebra", "G2"],
        &["verify", "--suite", "nonsense"],
        &["project", "--algebra", "A2", "--state", "e[1]"],
    ] {
        let out = kstructure(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn audit_and_cosocle_tables() {
    let audit = kstructure(&[
        "audit-so16",
        "--algebra",
        "E8",
        "-N",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(audit.status.code(), Some(0));
    assert!(stdout(&audit).contains("34816"));
    let cosocle = kstructure(&["cosocle", "--algebra", "A1", "-N", "2", "--format", "csv"]);
    assert_eq!(cosocle.status.code(), Some(0));
    assert!(stdout(&cosocle).starts_with("table,level,"));
}
