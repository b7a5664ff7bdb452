use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use tough_cli::{revalidate, ScanReport};

fn tough(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tough")).args(args).output().unwrap()
}

fn tough_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tough"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn analyze_net_at_one_half() {
    let out = tough(&["analyze", "E{O_", "--t", "1/2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["record"]["n"], 6);
    assert_eq!(v["record"]["tau"], "1/2");
    assert_eq!(v["record"]["minimally_t_tough"], true);
    assert_eq!(v["record"]["delta"], 1);
}

#[test]
fn scan_reports_are_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (w, p) in [("1", &a), ("4", &b)] {
        let out = tough(&[
            "scan", "--enumerate", "6", "--t", "1", "--verbose", "--workers", w, "--report", p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn stdin_scan_counts_malformed_lines() {
    let out = tough_stdin(&["scan", "--t", "1"], "Cr\nbad line\nDhc\n");
    assert_eq!(out.status.code(), Some(0));
    let report: ScanReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.totals.scanned, 2);
    assert_eq!(report.totals.malformed, 1);
    assert_eq!(report.malformed[0].line, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("status: all checks passed"));

    let out = tough_stdin(&["scan", "--t", "1", "--strict"], "Cr\nbad line\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn missing_input_is_an_operational_error() {
    let out = tough(&["scan", "--t", "1", "--input", "/nonexistent/graphs.g6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/graphs.g6"));
}

#[test]
fn selftest_exit_codes() {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/known.txt");
    assert_eq!(tough(&["selftest", "--fixtures", fixtures]).status.code(), Some(0));
    assert_ne!(tough(&["selftest", "--inject-fault"]).status.code(), Some(0));
    let out = tough(&["selftest", "--fixtures", "/nonexistent/fixtures.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("fixture file not found: /nonexistent/fixtures.txt"));
}

#[test]
fn octahedron_is_the_only_small_minimally_two_tough_claw_free_graph() {
    let out = tough(&[
        "scan", "--enumerate", "6", "--t", "2", "--filter", "claw-free", "--filter", "minimal", "--verbose",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: ScanReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.status, "all checks passed");
    let hits: Vec<_> = report.records.iter().filter(|r| r.qualifying).collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0].graph6, "E]~o");
    assert_eq!(hits[0].delta, 4);
    assert_eq!(hits[0].bound_ok, Some(true));
}

#[test]
fn timings_are_opt_in() {
    let out = tough(&["analyze", "Cr", "--t", "1", "--json"]);
    assert!(!String::from_utf8_lossy(&out.stdout).contains("elapsed_ms"));
    let out = tough(&["analyze", "Cr", "--t", "1", "--json", "--timings"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("elapsed_ms"));
}

#[test]
fn counterexamples_in_a_report_revalidate() {
    // no genuine failures exist at this scale; the report must say so and
    // any listed counterexample would have to survive revalidation
    let out = tough(&["scan", "--enumerate", "6", "--t", "1", "--exhaustive"]);
    let report: ScanReport = serde_json::from_slice(&out.stdout).unwrap();
    for cx in &report.counterexamples {
        revalidate(cx).unwrap();
    }
    assert!(report.counterexamples.is_empty());
}
