//! Black-box tests of the command-line interface: output shapes, exit
//! codes, and report file consistency.

use std::process::{Command, Output};

use supercong::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_supercong"))
}

fn run_args(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn list_prints_catalog_rows() {
    let out = run_args(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 66);
    assert!(text.contains("C03  (1.5)  p>3  mod p^4"));
    assert!(text.lines().next().unwrap().starts_with("I01  (1.1)"));
}

#[test]
fn list_filters_by_kind() {
    let out = run_args(&["list", "--filter", "conjecture"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.starts_with('X')));

    let out = run_args(&["list", "--filter", "q"]);
    assert_eq!(stdout(&out).lines().count(), 5);

    let out = run_args(&["list", "--filter", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seq_prints_exact_values() {
    let out = run_args(&["seq", "g", "4"]);
    assert_eq!(stdout(&out).trim(), "639");

    let out = run_args(&["seq", "g_poly", "2"]);
    assert_eq!(stdout(&out).trim(), "1 + 8*x + 6*x^2");

    let out = run_args(&["seq", "g_poly", "2", "--x=-1"]);
    assert_eq!(stdout(&out).trim(), "-1");

    let out = run_args(&["seq", "franel", "4"]);
    assert_eq!(stdout(&out).trim(), "346");
}

#[test]
fn seq_rejects_unknown_names_with_usage_exit() {
    let out = run_args(&["seq", "nope", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown sequence"));

    let out = run_args(&["seq", "g", "4", "--x=2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_passes_and_exits_zero() {
    let out = run_args(&["run", "--checks", "C05,C08", "--primes", "5..13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 2);
    assert!(text.contains("pass 2  fail 0  skip 0"));
}

#[test]
fn run_skips_below_threshold() {
    let out = run_args(&["run", "--checks", "C09", "--primes", "5..5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("SKIP"));
    assert!(text.contains("threshold p>5 admits no primes in 5..5"));
}

#[test]
fn run_reports_failures_with_exit_one() {
    let out = run_args(&[
        "run",
        "--checks",
        "C23",
        "--primes",
        "5..5",
        "--perturb",
        "g:4:1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    assert!(text.contains("15 mod 25 != 14 mod 25"));
}

#[test]
fn conjectures_print_no_counterexample() {
    let out = run_args(&["run", "--checks", "X07", "--primes", "5..13"]);
    assert!(stdout(&out).contains("NO-COUNTEREXAMPLE"));
}

#[test]
fn unknown_check_id_is_a_usage_error() {
    let out = run_args(&["run", "--checks", "C99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown check id"));
}

#[test]
fn unwritable_report_path_is_an_io_error() {
    let out = run_args(&[
        "run",
        "--checks",
        "I01",
        "--nmax",
        "3",
        "--out",
        "/no-such-dir/report.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_and_csv_reports_agree_on_triples() {
    let dir = std::env::temp_dir();
    let json_path = dir.join("supercong-cli-test.json");
    let csv_path = dir.join("supercong-cli-test.csv");
    let common = ["run", "--checks", "C0", "--primes", "5..13", "--out"];

    let out = bin().args(common).arg(&json_path).output().unwrap();
    assert!(out.status.success());
    let out = bin()
        .args(common)
        .arg(&csv_path)
        .args(["--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());

    let report = Report::from_json(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut rows = csv.lines().skip(1);
    for r in &report.results {
        let row = rows.next().unwrap();
        let mut fields = row.split(',');
        assert_eq!(fields.next().unwrap(), r.id);
        assert_eq!(fields.next().unwrap(), r.params);
        let status = serde_json::to_string(&r.status).unwrap();
        assert_eq!(fields.next().unwrap(), status.trim_matches('"'));
    }
    assert!(rows.next().is_none());
    let _ = std::fs::remove_file(&json_path);
    let _ = std::fs::remove_file(&csv_path);
}

#[test]
fn explore_prints_tables() {
    let out = run_args(&["explore", "--checks", "X03", "--nmax", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("NO-COUNTEREXAMPLE"));
    assert!(text.contains("n=9  nu3_cubic=8  nu3_linear=6  nu3_n=2"));

    let out = run_args(&["explore", "--checks", "C01"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run_args(&["--help"]).status.code(), Some(0));
    assert_eq!(run_args(&["--version"]).status.code(), Some(0));
    assert_eq!(run_args(&["bogus"]).status.code(), Some(2));
}
