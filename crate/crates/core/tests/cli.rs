use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bouquet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn poly_prints_polynomials() {
    let o = run(&["poly", "(1, 2, 1, 2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2+2z^2");
}

#[test]
fn poly_json_round_trips() {
    let o = run(&["--format", "json", "poly", "(1, -1)"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "euler");
    assert_eq!(v["coeffs"]["1"], "2");
}

#[test]
fn parse_errors_exit_two() {
    let o = run(&["poly", "(1, 2, 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(run(&["poly", "(1, -1, 2)"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "json", "poly", "(a, -a)", "--orientable"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = run(&["verify", "btForm", "-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS btForm n=6"));
}

#[test]
fn verify_over_cap_is_an_error() {
    assert_eq!(run(&["verify", "mutantEquiv", "-n", "9"]).status.code(), Some(2));
}

#[test]
fn ip_reads_graph_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.json");
    fs::write(
        &path,
        r#"{"vertices":[{"label":"a","sign":"+"},{"label":"b","sign":"+"}],"edges":[["a","b"]]}"#,
    )
    .unwrap();
    let o = run(&["ip", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "2+2z^2");
}

#[test]
fn igraph_formats() {
    let o = run(&["igraph", "(a, b, -a, b)"]);
    assert!(stdout(&o).contains("a-"));
    assert!(stdout(&o).contains("a-b"));
    let dot = stdout(&run(&["--format", "dot", "igraph", "(a, b, -a, b)"]));
    assert!(dot.contains("graph") && dot.contains("--"));
    assert_eq!(run(&["--format", "dot", "poly", "(a, a)"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "-n", "1"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["(1, 1)", "(1, -1)"]);
    assert_eq!(stdout(&run(&["enumerate", "-n", "2", "--raw"])).lines().count(), 12);
    assert_eq!(run(&["enumerate", "-n", "9"]).status.code(), Some(2));
}

#[test]
fn census_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for p in [&a, &b] {
        let o = run(&["census", "-n", "3", "-o", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let one = dir.path().join("one.jsonl");
    let o = run(&["census", "-n", "1", "-o", one.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "2");
    assert_eq!(fs::read_to_string(&one).unwrap().lines().count(), 2);
}

#[test]
fn mutants_lists_orbit() {
    let o = run(&["mutants", "(1, 2, 2, 1, 3, 3)"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "(1, 1, 2, 2, 3, 3)"));
}
