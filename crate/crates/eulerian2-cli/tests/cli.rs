//! End-to-end tests of the command-line interface: output formats and the
//! exit-code contract (0 verified, 1 mismatch, 2 usage/IO error).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use eulerian2::exact::Tables;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eulerian2"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn vendored_bfile() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/b008517.txt")
}

#[test]
fn table_plain_small() {
    let out = run(&["table", "--max-n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "1\n1 2\n1 8 6\n");
}

#[test]
fn table_csv_single_row() {
    let out = run(&["table", "--max-n", "1", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "1\n");
}

#[test]
fn table_csv_rows() {
    let out = run(&["table", "--max-n", "4", "--format", "csv"]);
    assert_eq!(stdout_str(&out), "1\n1,2\n1,8,6\n1,22,58,24\n");
}

#[test]
fn table_rejects_zero_rows() {
    let out = run(&["table", "--max-n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_json_round_trips() {
    let out = run(&["table", "--max-n", "12", "--format", "json"]);
    assert!(out.status.success());
    let parsed: Vec<Vec<String>> = serde_json::from_str(&stdout_str(&out)).expect("valid json");
    let mut tables = Tables::new();
    for (i, row) in parsed.iter().enumerate() {
        let expected: Vec<String> = tables
            .triangle_row(i as i64 + 1)
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(row, &expected, "row {}", i + 1);
    }
    assert_eq!(parsed.len(), 12);
}

#[test]
fn check_single_identity_passes() {
    let out = run(&["check", "stirling", "--max-n", "10", "--max-m", "10"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.starts_with("PASS stirling"));
}

#[test]
fn check_unknown_identity_is_usage_error() {
    let out = run(&["check", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown identity"));
}

#[test]
fn check_all_emits_json_report_per_line() {
    // small overrides keep the sweep fast; every report must still pass
    let out = run(&[
        "check", "all", "--max-n", "6", "--max-m", "6", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() >= 6, "expected at least 6 reports");
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("one json object per line");
        assert!(v.get("identity").is_some());
        assert!(v.get("passed").is_some());
        assert!(v.get("range").is_some());
        assert_eq!(v["counterexample"], serde_json::Value::Null);
        assert!(v["passed"].as_bool().unwrap());
    }
}

#[test]
fn check_list_names() {
    let out = run(&["check", "all", "--list"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("stirling"));
    assert!(text.contains("printed-quad-sum"));
}

#[test]
fn gf_compare_small_box_matches() {
    let out = run(&["gf", "--box-n", "4", "--box-t", "4", "--compare"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.lines().count() == 26); // header + 25 cells
    assert!(!text.contains(" no"));
}

#[test]
fn gf_zero_box_is_single_cell() {
    let out = run(&["gf", "--box-n", "0", "--box-t", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "1\n");
}

#[test]
fn gf_json_grid_has_expected_values() {
    let out = run(&["gf", "--box-n", "3", "--box-t", "3", "--format", "json"]);
    assert!(out.status.success());
    let grid: Vec<Vec<String>> = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(grid[0][0], "1");
    assert_eq!(grid[1][1], "1");
    assert_eq!(grid[3][2], "8");
    assert_eq!(grid[2][3], "0");
}

#[test]
fn oeis_vendored_reference_matches() {
    let out = run(&["oeis", "--file", vendored_bfile().to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {:?}", out.stderr);
    let text = stdout_str(&out);
    assert!(text.contains("A008517"));
    assert!(text.contains("55 values compared"));
    assert!(text.contains("all match"));
}

#[test]
fn oeis_max_rows_limits_comparison() {
    let out = run(&[
        "oeis",
        "--file",
        vendored_bfile().to_str().unwrap(),
        "--max-rows",
        "4",
    ]);
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("10 values compared"));
}

#[test]
fn oeis_detects_corrupted_value() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // row 3 is 1, 8, 6; corrupt the middle entry (index 5)
    write!(f, "1 1\n2 1\n3 2\n4 1\n5 9\n6 6\n").unwrap();
    let out = run(&["oeis", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_str(&out);
    assert!(text.contains("index 5"), "got: {text}");
    assert!(text.contains("row 3"));
}

#[test]
fn oeis_empty_file_warns_and_succeeds() {
    let f = tempfile::NamedTempFile::new().unwrap();
    let out = run(&["oeis", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("0 values compared"));
}

#[test]
fn oeis_malformed_token_is_usage_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "1 not-a-number").unwrap();
    let out = run(&["oeis", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oeis_non_contiguous_index_is_usage_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "1 1\n4 2\n").unwrap();
    let out = run(&["oeis", "--file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oeis_missing_file_is_usage_error() {
    let out = run(&["oeis", "--file", "/nonexistent/b000000.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
