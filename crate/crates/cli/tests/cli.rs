use std::process::{Command, Output};

const GOLDEN_F19: &str = include_str!("../../core/tests/golden/f19_table.csv");

fn wps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wps(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn points_rows() {
    let csv = stdout(&[
        "points",
        "--weights",
        "2,3,5",
        "--q",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(csv.lines().count(), 1 + 21);
    let csv = stdout(&["points", "--weights", "1,1", "--q", "2", "--format", "csv"]);
    assert_eq!(csv, "x0,x1\n0,1\n1,0\n1,1\n");
}

#[test]
fn points_singular_locus() {
    let text = stdout(&["points", "--weights", "1,2,3", "--q", "3", "--singular"]);
    assert!(text.contains("singular primes: {2,3}"), "{text}");
    assert!(text.contains("count     13"), "{text}");
}

#[test]
fn f19_table_matches_golden() {
    assert_eq!(
        stdout(&["table", "--paper-f19", "--format", "csv"]),
        GOLDEN_F19
    );
}

#[test]
fn smaller_table() {
    let csv = stdout(&["table", "--q", "5", "--d", "4", "--format", "csv"]);
    assert!(
        csv.starts_with("code,n,k,d_min,lambda,d_min_source\nRM,25,15,5,"),
        "{csv}"
    );
    assert!(csv.contains("\"WPRM (1,4,4)\",31,3,25,"), "{csv}");
}

#[test]
fn code_report_and_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = dir.path().join("g.txt");
    let json = stdout(&[
        "code",
        "--kind",
        "prm",
        "--q",
        "2",
        "--d",
        "1",
        "--format",
        "json",
        "--matrix",
        matrix.to_str().unwrap(),
    ]);
    assert!(json.contains("\"d_min\": 4"), "{json}");
    let m = std::fs::read_to_string(&matrix).unwrap();
    let mut lines = m.lines();
    assert_eq!(lines.next(), Some("2 2 1 1,1,1 7 3"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn code_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("params.json");
    stdout(&[
        "code",
        "--kind",
        "wprm",
        "--weights",
        "1,2,2",
        "--q",
        "19",
        "--d",
        "16",
        "--method",
        "auto",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    let json = std::fs::read_to_string(out).unwrap();
    assert!(
        json.contains("\"k\": 45") && json.contains("\"d_min\": 228"),
        "{json}"
    );
    assert!(json.contains("\"lambda_display\": \"0.716\""), "{json}");
}

#[test]
fn eq_search_and_family() {
    let csv = stdout(&[
        "eq-search",
        "--weights",
        "1,2,3",
        "--q",
        "3",
        "--d",
        "6",
        "--format",
        "csv",
    ]);
    let row = csv.lines().nth(1).unwrap();
    assert!(row.starts_with("\"1,2,3\",6,3,10,1093,10,10,"), "{csv}");
    let text = stdout(&[
        "family",
        "--weights",
        "2,3,5",
        "--q",
        "5",
        "--m0",
        "3,0,0",
        "--m1",
        "0,2,0",
        "--t",
        "1,2,3",
    ]);
    assert!(text.contains("zeros        26"), "{text}");
    assert!(text.contains("agree        true"), "{text}");
}

#[test]
fn count_zeros_reports_bounds() {
    let json = stdout(&[
        "count-zeros",
        "--weights",
        "1,1,1",
        "--q",
        "2",
        "--poly",
        "X0 + X1 + X2",
        "--sharp",
        "--format",
        "json",
    ]);
    assert!(
        json.contains("\"value\": 3") && json.contains("\"sharp\": true"),
        "{json}"
    );
}

#[test]
fn lines_check_passes() {
    let text = stdout(&["lines", "--weights", "1,2,3", "--q", "7", "--check"]);
    assert!(text.trim_end().ends_with("PASS"), "{text}");
    let csv = stdout(&["lines", "--weights", "1,1,2", "--q", "3", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 1 + 1 + 3 + 9);
}

#[test]
fn verify_is_reproducible_and_records_seed() {
    let args = [
        "verify",
        "--suite",
        "bounds,lemma2",
        "--q",
        "3,4",
        "--samples",
        "300",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = stdout(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_wps"))
        .args(args)
        .env("WPS_THREADS", "1")
        .output()
        .unwrap();
    assert!(b.status.success());
    assert_eq!(a.as_bytes(), b.stdout.as_slice());
    assert!(a.contains("\"seed\": 7"));
}

#[test]
fn verify_suites_pass() {
    let text = stdout(&[
        "verify",
        "--suite",
        "lemma2",
        "--q",
        "3,4,5",
        "--samples",
        "60",
    ]);
    assert!(text.contains("PASS lemma2"), "{text}");
    let text = stdout(&[
        "verify",
        "--suite",
        "theorem1",
        "--q",
        "2,3",
        "--max-weight",
        "4",
    ]);
    assert!(text.contains("PASS theorem1"), "{text}");
}

#[test]
fn errors_exit_with_status_2() {
    let out = wps(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = wps(&[
        "eq-search",
        "--weights",
        "1,1,1",
        "--q",
        "9",
        "--d",
        "4",
        "--budget",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let out = wps(&["points", "--weights", "2,4", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = wps(&["code", "--kind", "wprm", "--q", "3", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
