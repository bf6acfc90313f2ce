use std::path::PathBuf;
use std::process::{Command, Output};

fn grig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grig")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = grig(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("grig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn reduce_and_word_problem() {
    assert_eq!(stdout(&["reduce", "bcd"]), "1\n");
    assert_eq!(stdout(&["reduce", "abcbda"]), "aba\n");
    assert_eq!(stdout(&["wp", "adadadad"]), "YES\n");
    assert_eq!(stdout(&["wp", "abab"]), "NO\n");
}

#[test]
fn split_and_norm() {
    assert_eq!(stdout(&["split", "abab"]), "(ca, ac)\n");
    assert_eq!(stdout(&["split", "ab"]), "odd; split(aba) = (c, a)\n");
    assert_eq!(stdout(&["norm", "b", "--exact"]), "2 + 0α + 0α²\n");
}

#[test]
fn cosets() {
    assert_eq!(stdout(&["coset", "abab"]), "0 (even)\n");
    assert_eq!(stdout(&["coset"]).lines().count(), 16);
    let csv = scratch("lift.csv");
    stdout(&["coset", "--lift-csv", csv.to_str().unwrap()]);
    let text = std::fs::read_to_string(csv).unwrap();
    assert_eq!(text.lines().next(), Some("i,j,lifted"));
    assert_eq!(text.lines().count(), 33);
}

#[test]
fn conjugacy_with_exports() {
    assert_eq!(stdout(&["conj", "b", "c"]), "NO, Q = {}\n");
    let (json, dot) = (scratch("tree.json"), scratch("tree.dot"));
    let answer = stdout(&[
        "conj",
        "abab",
        "baba",
        "--tree",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(answer.starts_with("YES, Q = {"), "{answer}");
    assert!(std::fs::read_to_string(json).unwrap().contains("\"kind\""));
    assert!(std::fs::read_to_string(dot).unwrap().starts_with("digraph"));
}

#[test]
fn exit_codes() {
    assert_eq!(grig(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(grig(&["conj", "ab"]).status.code(), Some(1));
    assert_eq!(grig(&["--help"]).status.code(), Some(0));
    let bad = grig(&["reduce", "abx"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("cannot parse"));
}

#[test]
fn selftest_passes() {
    let out = stdout(&["selftest", "--json"]);
    assert!(out.contains("\"passed\""), "{out}");
}

#[test]
fn bench_writes_csv() {
    let csv = scratch("bench.csv");
    let out = stdout(&["bench", "--max-len", "64", "--samples", "2", "--out", csv.to_str().unwrap()]);
    assert!(out.contains("tree size exponent"));
    let text = std::fs::read_to_string(csv).unwrap();
    assert_eq!(text.lines().next(), Some("n,tree_size,visited,millis"));
    assert!(text.lines().count() > 2);
}
