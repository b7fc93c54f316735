use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_septic-index"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn index_json_reports_the_field_index() {
    let o = run(&["index", "--a", "35", "--b", "72", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["field_index"], 72);
    assert_eq!(v["a"], "35");
    assert_eq!(v["discrepancies"].as_array().unwrap().len(), 0);
}

#[test]
fn index_text_with_negative_a() {
    let o = run(&["index", "--a", "-1", "--b", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("i(K) = 9"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    // x^7 + 2x + 3 has the root -1
    assert_eq!(run(&["index", "--a", "2", "--b", "3"]).status.code(), Some(2));
    assert_eq!(run(&["index", "--a", "0", "--b", "0"]).status.code(), Some(2));
    assert_eq!(run(&["index", "--a", "64", "--b", "128"]).status.code(), Some(3));
    assert_eq!(run(&["factor", "--a", "6", "--b", "6", "--p", "4"]).status.code(), Some(1));
    assert_eq!(run(&["factor", "--a", "6", "--b", "6", "--p", "101"]).status.code(), Some(1));
    assert_eq!(run(&["index", "--a", "x", "--b", "1"]).status.code(), Some(1));
    assert_eq!(run(&["monogenic-family", "--u", "1", "--v", "4", "--a", "1", "--b", "1"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn factor_prints_the_ideal_factorization() {
    let o = run(&["factor", "--a", "28", "--b", "32", "--p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("2 Z_K = P1 P2^3 P3^3"), "{s}");

    let o = run(&["factor", "--a", "28", "--b", "32", "--p", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["p"], 2);
    assert!(v["decomposition"]["primes"].as_array().unwrap().len() == 3);
}

#[test]
fn scan_is_independent_of_the_thread_count() {
    let one = run(&["scan", "--a", "-8..8", "--b", "1..12", "--check", "--jobs", "1"]);
    let four = run(&["scan", "--a", "-8..8", "--b", "1..12", "--check", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
    let s = stdout(&one);
    assert!(s.lines().count() > 100);
    assert!(String::from_utf8_lossy(&one.stderr).contains("0 inconsistencies"));
}

#[test]
fn scan_of_a_reducible_box_is_header_only() {
    let o = run(&["scan", "--a", "0..0", "--b", "0..0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("1 reducible"));
}

#[test]
fn scan_json_lines_round_trip() {
    let o = run(&["scan", "--a", "3", "--b", "8", "--json"]);
    let line = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["field_index"], 8);
}

#[test]
fn monogenic_family() {
    let o = run(&["monogenic-family", "--u", "6", "--v", "6", "--a", "1", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("theta = alpha^6 / 2^5"), "{}", stdout(&o));

    let o = run(&["monogenic-family", "--u", "1", "--v", "2", "--a", "1", "--b", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["outcome"], "discrepancy");
}

#[test]
fn verify_tables_agrees() {
    let o = run(&["verify-tables", "--budget", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
}
