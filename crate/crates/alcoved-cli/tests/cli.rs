//! End-to-end command line tests: exit codes, golden outputs, round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_alcoved"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    cmd.args(args);
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn check_reports_ni_and_vi_status() {
    let out = run(&["check", data("cube_centered.txt").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "NI: yes, VI: no\n");

    let out = run(&["check", data("cube_cornered.txt").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "NI: yes, VI: yes\n");
}

#[test]
fn check_rejects_positive_entries_with_exit_one() {
    let out = run(&["check", data("not_ni.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NI: no, VI: no\n");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("violation"), "stderr: {err}");
}

#[test]
fn parse_failures_exit_two() {
    let dir = std::env::temp_dir().join("alcoved-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "1 2 three").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let inf = dir.join("inf.txt");
    std::fs::write(&inf, "0 -inf 0 0 0 0 0 0 0 0 0 0 0 0 0 0").unwrap();
    let out = run(&["check", inf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["check", dir.join("does-not-exist.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_matches_the_golden_reports() {
    for k in 1..=8 {
        let out = run(&["classify", data(&format!("qe{k}.txt")).to_str().unwrap()]);
        assert!(out.status.success());
        assert_eq!(
            stdout(&out),
            golden(&format!("qe{k}_classify.txt")),
            "class {k}"
        );
    }
    let out = run(&["classify", data("cube_cornered.txt").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), golden("cube_cornered_classify.txt"));
}

#[test]
fn classify_json_round_trips_byte_identically() {
    for name in ["qe1.txt", "qe6.txt", "cube_centered.txt"] {
        let out = run(&["classify", data(name).to_str().unwrap(), "--format", "json"]);
        assert!(out.status.success());
        let text = stdout(&out);
        let report: alcoved_cli::report::Report = serde_json::from_str(&text).expect("parses back");
        assert_eq!(report.to_json(), text, "{name}");
    }
    let out = run(&[
        "classify",
        data("cube_centered.txt").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&out), golden("cube_centered_classify.json"));
}

#[test]
fn classify_marks_non_maximal_input() {
    let out = run(&["classify", data("cube_cornered.txt").to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("qe class: not-applicable: non-maximal (f=(8,12,6))"));
    assert!(text.contains("f-vector: (8, 12, 6)"));
}

#[test]
fn vertices_tables() {
    let out = run(&["vertices", data("cube_cornered.txt").to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("123 (N): (0,0,0)"), "{text}");

    let out = run(&["vertices", data("qe1.txt").to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().count(), 20);

    let out = run(&["vertices", data("cube_centered.txt").to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("(N): (1,1,1)"), "{text}");
}

#[test]
fn mesh_headers_and_degenerate_rejection() {
    let out = run(&["mesh", data("qe1.txt").to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(text.lines().nth(1), Some("20 12 30"));

    let out = run(&["mesh", data("cube_cornered.txt").to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().nth(1), Some("8 6 12"));

    let out = run(&["mesh", data("flat.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // a box with one zero edge length is a flat square
    let out = run(&["mesh", data("flat_2d.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("2-dimensional"), "stderr: {err}");
}

#[test]
fn mesh_writes_output_file_with_requested_precision() {
    let dir = std::env::temp_dir().join("alcoved-mesh-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("qe2.off");
    let out = run(&[
        "mesh",
        data("qe2.txt").to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
        "--precision",
        "6",
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("OFF\n20 12 30\n"));
}

#[test]
fn zero_precision_is_a_usage_error() {
    let out = run(&[
        "mesh",
        data("qe1.txt").to_str().unwrap(),
        "--precision",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_table_lists_eight_orbits() {
    let out = run(&["orbits"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("QE")).collect();
    assert_eq!(rows.len(), 8);
    assert!(
        text.contains("sizes: 2 6 6 6 6 12 12 12 (sum 62)"),
        "{text}"
    );
    let qe6 = rows.iter().find(|r| r.starts_with("QE6")).unwrap();
    assert!(qe6.contains("size  2"), "{qe6}");
}

#[test]
fn orbit_json_carries_full_orbits() {
    let out = run(&["orbits", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let total: u64 = rows.iter().map(|r| r["size"].as_u64().unwrap()).sum();
    assert_eq!(total, 62);
    for r in rows {
        assert_eq!(
            r["orbit"].as_array().unwrap().len(),
            r["size"].as_u64().unwrap() as usize
        );
    }
}
