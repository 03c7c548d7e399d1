//! End-to-end runs of the `kshell` binary.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn kshell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kshell")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const TRIANGLES: &str = "a b c\na e f\nc d f\n";
const PATH: &str = "a b\nb c\n";

#[test]
fn search_exit_codes() {
    let dir = TempDir::new().unwrap();
    let disjoint = write(&dir, "d.txt", "a b\nc d\ne f\n");
    let triangles = write(&dir, "r.txt", TRIANGLES);
    assert_eq!(kshell(&["search", p(&disjoint), "--k", "2"]).status.code(), Some(0));
    assert_eq!(kshell(&["search", p(&triangles), "--k", "2"]).status.code(), Some(1));
    // k above dim + 1 is an input error.
    assert_eq!(kshell(&["search", p(&triangles), "--k", "4"]).status.code(), Some(2));
    let missing = dir.path().join("missing.txt");
    assert_eq!(kshell(&["search", p(&missing), "--k", "1"]).status.code(), Some(2));
}

#[test]
fn check_order_reports_failed_step() {
    let dir = TempDir::new().unwrap();
    let triangles = write(&dir, "r.txt", TRIANGLES);
    let out = kshell(&["check-order", p(&triangles), "--k", "2", "--order", "0,1,2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["condition_c"]["holds"], serde_json::json!(true));
    let bad = kshell(&["check-order", p(&triangles), "--k", "2", "--order", "0,0,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "vertices: a b\na b\nb z\n");
    let out = kshell(&["search", p(&bad), "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kshell"))
        .args(["hilbert", "-", "--max-degree", "4"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"a b\nb c\nc d\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains('7') && text.contains("10"), "{text}");
}

#[test]
fn deterministic_reruns_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p.txt", PATH);
    for args in [
        vec!["search", p(&path), "--k", "1", "--format", "json"],
        vec!["stanley", p(&path), "--k", "2", "--expand", "--format", "json"],
        vec!["sr-ideal", p(&path), "--format", "json"],
        vec!["decide-graph", p(&path), "--k", "1", "--strategy", "recursive", "--format", "json"],
    ] {
        let first = kshell(&args);
        let second = kshell(&args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn json_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p.txt", PATH);

    // An expanded complex written as JSON searches the same as its text form.
    let json = kshell(&["expand-complex", p(&path), "--k", "2", "--format", "json"]);
    let text = kshell(&["expand-complex", p(&path), "--k", "2"]);
    let json_path = write(&dir, "e.json", &stdout(&json));
    let text_path = write(&dir, "e.txt", &stdout(&text));
    let a = kshell(&["search", p(&json_path), "--k", "2", "--format", "json"]);
    let b = kshell(&["search", p(&text_path), "--k", "2", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    // Ideals: the JSON and text forms of an emitted ideal expand identically.
    let json = kshell(&["sr-ideal", p(&path), "--format", "json"]);
    let text = kshell(&["sr-ideal", p(&path)]);
    let json_path = write(&dir, "i.json", &stdout(&json));
    let text_path = write(&dir, "i.txt", &stdout(&text));
    let a = kshell(&["expand-ideal", p(&json_path), "--alpha", "2,1,3", "--format", "json"]);
    let b = kshell(&["expand-ideal", p(&text_path), "--alpha", "2,1,3", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stanley_report_fields() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p.txt", PATH);
    let out = kshell(&["stanley", p(&path), "--k", "2", "--expand", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["spaces", "min_Z", "target", "partition_ok", "max_degree"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report["partition_ok"], serde_json::json!(true));
    assert_eq!(report["target"], serde_json::json!(2));
    assert!(report["min_Z"].as_u64().unwrap() >= 2);
}

#[test]
fn graph_commands() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "vertices: x1 x2 x3 x4 x5\nx1 x3\nx1 x4\nx2 x4\nx2 x5\nx3 x5\nx4 x5\n");
    let indep = kshell(&["indep", p(&g)]);
    assert_eq!(indep.status.code(), Some(0));
    let text = stdout(&indep);
    let facets: Vec<&str> = text.lines().filter(|l| !l.starts_with("vertices")).collect();
    assert_eq!(facets, ["x1 x2", "x1 x5", "x2 x3", "x3 x4"]);
    let dup = kshell(&["duplicate", p(&g), "--alpha", "2,1,1,2,1"]);
    assert_eq!(dup.status.code(), Some(0));
    let loops = write(&dir, "loop.txt", "a a\n");
    assert_eq!(kshell(&["indep", p(&loops)]).status.code(), Some(2));
}
