use std::path::PathBuf;
use std::process::{Command, Output};

use ehrhart_core::engine::ehrhart;
use ehrhart_core::io::{parse_polytope, qp_from_json, result_from_json};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(args)
        .env_remove("EHRHART_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn compute_triangle() {
    let o = run(&["compute", &path("triangle.txt")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("period 1"), "{out}");
    assert!(out.contains("1/2 t^2 + 3/2 t + 1"), "{out}");
    assert!(out.contains("volume: 1/2"), "{out}");
}

#[test]
fn compute_half_segment_has_period_two() {
    let o = run(&["compute", &path("half_segment.txt")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("period 2"));
}

#[test]
fn zero_denominator_is_reported() {
    let o = run(&["compute", &path("broken.txt")]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("1/0"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn missing_file() {
    let o = run(&["compute", "/nonexistent/polytope.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn machine_output_round_trips() {
    let o = run(&["compute", &path("half_segment.txt"), "--format", "machine"]);
    assert!(o.status.success());
    let parsed = result_from_json(&stdout(&o)).unwrap();
    let src = std::fs::read_to_string(fixture("half_segment.txt")).unwrap();
    assert_eq!(parsed, ehrhart(&parse_polytope(&src).unwrap()).unwrap());
}

#[test]
fn machine_output_is_deterministic() {
    let a = run(&["compute", &path("triangle.txt"), "--format", "machine"]);
    let b = run(&[
        "compute",
        &path("triangle.txt"),
        "--format",
        "machine",
        "--summation",
        "interpolation",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_simplex() {
    let o = run(&["verify", &path("simplex3.txt"), "--tmax", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS oracle: t = 0..10"));
}

#[test]
fn verify_default_range() {
    let o = run(&["verify", &path("half_segment.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("t = 0..8"), "{}", stdout(&o));
}

#[test]
fn verify_flags_corrupted_cache() {
    let o = run(&[
        "verify",
        &path("triangle.txt"),
        "--cached",
        &path("triangle_corrupted.json"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(
        out.contains("FAIL oracle: first mismatch at t = 1: oracle 3, quasi-polynomial 4"),
        "{out}"
    );
}

#[test]
fn verify_respects_oracle_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(["verify", &path("simplex3.txt")])
        .env("EHRHART_ORACLE_CAP", "30")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    // (t+1)^3 ≤ 30 only up to t = 2.
    assert!(stdout(&o).contains("t = 0..2"), "{}", stdout(&o));
    let bad = Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(["verify", &path("simplex3.txt")])
        .env("EHRHART_ORACLE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("EHRHART_ORACLE_CAP"));
}

#[test]
fn interior_segment() {
    let tmp = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(tmp.path(), "ambient_dim 1\n0\n1\n").unwrap();
    let o = run(&["interior", tmp.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert!(
        stdout(&o).contains("t ≡ 0 (mod 1): t - 1"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn periods_table() {
    let o = run(&["periods", &path("half_segment.txt")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("0  2               2"), "{out}");
    assert!(out.contains("1  1               1"), "{out}");
}

#[test]
fn qsum_four_cases() {
    let o = run(&["qsum", &path("g_1_2_0.txt"), "3", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("period 4, degree 2"), "{out}");
    assert!(
        out.contains("t ≡ 1 (mod 4): 9/32 t^2 - 3/16 t - 3/32"),
        "{out}"
    );
}

#[test]
fn qsum_polynomials() {
    let tmp = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(tmp.path(), "1\n").unwrap();
    let o = run(&["qsum", tmp.path().to_str().unwrap(), "1", "1"]);
    assert!(stdout(&o).contains(": t + 1"), "{}", stdout(&o));
    std::fs::write(tmp.path(), "t+1\n").unwrap();
    let o = run(&[
        "qsum",
        tmp.path().to_str().unwrap(),
        "1",
        "1",
        "--method",
        "interpolation",
    ]);
    assert!(
        stdout(&o).contains(": 1/2 t^2 + 3/2 t + 1"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn qsum_machine_round_trip() {
    let o = run(&[
        "qsum",
        &path("g_1_2_0.txt"),
        "3",
        "2",
        "--format",
        "machine",
    ]);
    let qp = qp_from_json(&stdout(&o)).unwrap();
    assert_eq!(qp.period(), 4);
    // Feed the JSON back in as a summand.
    let tmp = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(tmp.path(), stdout(&o)).unwrap();
    let again = run(&["qsum", tmp.path().to_str().unwrap(), "1", "1"]);
    assert!(again.status.success(), "{}", stderr(&again));
}

#[test]
fn qsum_parse_error_has_position() {
    let tmp = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(tmp.path(), "period 2\n0: 1/0 t\n").unwrap();
    let o = run(&["qsum", tmp.path().to_str().unwrap(), "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn unknown_strategy() {
    let o = run(&["compute", &path("triangle.txt"), "--summation", "magic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("g-basis"));
}

#[test]
fn count_with_both_counters() {
    let a = run(&["count", &path("half_segment.txt"), "--tmax", "6"]);
    let b = run(&[
        "count",
        &path("half_segment.txt"),
        "--tmax",
        "6",
        "--counter",
        "brute-force",
    ]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("6 4\n"));
}
