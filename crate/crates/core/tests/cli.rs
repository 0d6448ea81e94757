use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn chipfire(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chipfire"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn canonicalize_json() {
    let o = chipfire(&["--json", "canonicalize", "[[3,1],[4,-6],[7,1],[-8,-8],[3,0]]"], None);
    assert!(o.status.success());
    assert_eq!(
        json_out(&o),
        json!({"canonical":[0,1,0,0,0],"certificate":[[-5,-1],[-4,1],[-4,3],[4,-1],[-1,0]]})
    );
}

#[test]
fn canonicalize_from_stdin_with_trace() {
    let o = chipfire(&["canonicalize", "--trace", "-"], Some("[[3,1],[4,-6],[7,1],[-8,-8],[3,0]]"));
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("[10, -4, 22, -17, 10]"), "{text}");
    assert!(text.contains("(0, 1, 0, 0, 0)"), "{text}");
}

#[test]
fn equivalent_and_group() {
    let o = chipfire(
        &["--json", "equivalent", "[[0,0],[0,0],[0,0],[0,0],[0,0]]", "[[3,0],[0,0],[0,0],[0,0],[0,0]]"],
        None,
    );
    assert_eq!(json_out(&o), json!({"equivalent": false}));
    let o = chipfire(&["--json", "group", "--preset", "r10"], None);
    assert_eq!(json_out(&o), json!({"invariant_factors":[3,3,3,6],"order":162}));
    let o = chipfire(&["--json", "group", r#"{"r":2,"n":3,"D":[[-1],[-1]]}"#], None);
    assert_eq!(json_out(&o), json!({"invariant_factors":[3],"order":3}));
    let o = chipfire(&["--json", "bases", "--preset", "r10"], None);
    let v = json_out(&o);
    assert_eq!((v["count"].clone(), v["det_k"].clone()), (json!(162), json!(-162)));
}

#[test]
fn puzzle_is_reproducible() {
    let a = chipfire(&["--json", "puzzle", "--seed", "9", "--difficulty", "12"], None);
    let b = chipfire(&["--json", "puzzle", "--seed", "9", "--difficulty", "12"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_out(&a)["rng"], json!("chacha8"));
}

#[test]
fn exit_codes() {
    let o = chipfire(&["canonicalize", "[[1,0]"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = chipfire(&["canonicalize", "[[1,0]]"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = chipfire(&["puzzle", "--seed", "1", "--difficulty", "0"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = chipfire(&["--json", "group", r#"{"r":2,"n":4,"D":[[1,1],[-1,1]]}"#], None);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["code"], json!("not_totally_unimodular"));
}

#[test]
fn serve_until_eof() {
    let input =
        "{\"op\":\"group\",\"params\":{\"preset\":\"r10\"},\"id\":1}\nbroken\n{\"op\":\"moves\",\"id\":2}\n";
    let o = chipfire(&["serve"], Some(input));
    assert!(o.status.success());
    let lines: Vec<Value> =
        String::from_utf8(o.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["id"], json!(1));
    assert_eq!(lines[1]["error"]["code"], json!("parse"));
    assert_eq!(lines[2]["result"].as_array().unwrap().len(), 20);
}

#[test]
fn selftest_passes() {
    let start = std::time::Instant::now();
    let o = chipfire(&["selftest"], None);
    assert!(start.elapsed() < std::time::Duration::from_secs(10));
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(!text.contains("FAIL"));
}
