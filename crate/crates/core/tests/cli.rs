//! End-to-end runs of the command-line binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bounded-dl"))
        .args(args)
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bounded-dl"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_sat_prints_a_model() {
    let o = run(&["check-sat", &data("worked.kb")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("sat\n"));
    assert!(out.contains("r(a, a).\n"));
    assert!(out.ends_with("---\n"));
}

#[test]
fn unsat_exits_with_one() {
    let o = run(&["check-sat", &data("pigeonhole3.kb")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "unsat\n");
}

#[test]
fn entails_and_countermodel() {
    let kb = data("worked.kb");
    let yes = run(&["entails", &kb, "--axiom", "Top SubClassOf B"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes), "entailed\n");
    let no = run(&["entails", &kb, "--axiom", "Top SubClassOf not A"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).starts_with("not entailed\nA(a).\n"));
}

#[test]
fn unknown_name_in_query_is_an_error() {
    let o = run(&["entails", &data("worked.kb"), "--axiom", "Top SubClassOf C"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: --axiom:"));
}

#[test]
fn limit_caps_the_output() {
    let o = run(&["models", &data("sudoku4.kb"), "--limit", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("---\n").count(), 3);
    let zero = run(&["models", &data("sudoku4.kb"), "--limit", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn json_lines_cover_the_vocabulary() {
    let o = run(&["models", &data("worked.kb"), "--format", "json-lines"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["concepts"]["A"], serde_json::json!(["a", "b"]));
        assert!(v["roles"]["s"]
            .as_array()
            .unwrap()
            .contains(&serde_json::json!(["a", "b"])));
    }
}

#[test]
fn oracle_and_pipeline_print_the_same_models() {
    let kb = data("worked.kb");
    let mut piped: Vec<String> = stdout(&run(&["models", &kb]))
        .split_inclusive("---\n")
        .map(str::to_owned)
        .collect();
    let mut brute: Vec<String> = stdout(&run(&["models", &kb, "--oracle"]))
        .split_inclusive("---\n")
        .map(str::to_owned)
        .collect();
    piped.sort();
    brute.sort();
    assert_eq!(piped, brute);
}

#[test]
fn reads_from_stdin() {
    let o = run_stdin(&["check-sat", "-"], "A(a). A SubClassOf not A.");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "unsat\n");
}

#[test]
fn syntax_errors_carry_a_position() {
    let o = run_stdin(&["check-sat", "-"], "A(a).\nA SubClassOf .");
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.starts_with("error: -:2:"), "{err}");
}

#[test]
fn missing_file_is_an_error() {
    let o = run(&["check-sat", "/nonexistent/x.kb"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: /nonexistent/x.kb:"));
}

#[test]
fn stats_go_to_stderr() {
    let o = run(&["check-sat", &data("pigeonhole3.kb"), "--stats"]);
    assert_eq!(stdout(&o), "unsat\n");
    assert!(stderr(&o).starts_with("stats: "));
}

#[test]
fn translate_prints_a_program() {
    let o = run(&["translate", &data("worked.kb")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("top(a).\n"));
    assert!(out.lines().all(|l| l.ends_with('.')));
    let emit = run(&["check-sat", &data("worked.kb"), "--solver", "emit-only"]);
    assert_eq!(stdout(&emit), out);
}

#[test]
fn normalize_and_axiomatize_round_trip() {
    let kb = data("worked.kb");
    let norm = run(&["normalize", &kb]);
    assert_eq!(norm.status.code(), Some(0));
    let bm = run(&["axiomatize", &kb]);
    assert_eq!(bm.status.code(), Some(0));
    // The axiomatized knowledge base is itself valid input with the same
    // bounded models.
    let again = run_stdin(&["models", "-"], &stdout(&bm));
    assert_eq!(stdout(&again), stdout(&run(&["models", &kb])));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
