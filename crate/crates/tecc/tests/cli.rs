//! The `tecc` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

fn tecc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tecc"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn decompose_formats() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", K4);
    let o = tecc(&["decompose", "-i", &k4]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph n=4 m=6 components=1 bridges=0 auxiliary=0\n"));

    let o = tecc(&["decompose", "-i", &k4, "-f", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["components"][0]["edges"].as_array().unwrap().len(), 6);

    let out = dir.path().join("k4.dot");
    let o = tecc(&[
        "decompose",
        "-i",
        &k4,
        "-f",
        "dot",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(out)
        .unwrap()
        .starts_with("graph decomposition {"));
}

#[test]
fn dot_uses_labels() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "l.txt", "# label 0 hub\n2 1\n0 1\n");
    let o = tecc(&["decompose", "-i", &f, "-f", "dot"]);
    assert!(stdout(&o).contains("0 [label=\"hub\"];"));
}

#[test]
fn parse_errors_exit_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "2 1\n0 5\n");
    let o = tecc(&["decompose", "-i", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("line 2: endpoint 5 out of range"),
        "{}",
        stderr(&o)
    );

    let o = tecc(&["decompose", "-i", "/definitely/not/here"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(tecc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        tecc(&["decompose", "-i", &bad, "-f", "yaml"]).status.code(),
        Some(2)
    );
    assert_eq!(tecc(&["verify"]).status.code(), Some(2));
    assert_eq!(
        tecc(&["gen", "--spec", "random:x:3"]).status.code(),
        Some(2)
    );
    assert_eq!(tecc(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_single_file_and_mutation() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", K4);
    let o = tecc(&["verify", "-i", &k4]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary: 1/1 PASS, 0 FAIL, 0 skipped"));

    let o = tecc(&["verify", "-i", &k4, "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert!(
        stdout(&o).contains("missing original edge"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn verify_corpus() {
    let o = tecc(&[
        "verify",
        "--corpus",
        "300",
        "--planted",
        "30",
        "--seed",
        "11",
        "-q",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("summary: 330/330 PASS, 0 FAIL, 0 skipped"));

    let o = tecc(&[
        "verify", "--corpus", "200", "--seed", "11", "--mutate", "-q",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).contains(" 0 FAIL"));
}

#[test]
fn oversized_graphs_are_skipped() {
    let o = tecc(&[
        "verify",
        "--corpus",
        "5",
        "--max-m",
        "30",
        "--max-edges",
        "0",
        "-q",
    ]);
    assert!(stderr(&o).contains("skipped: graph has"), "{}", stderr(&o));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn gen_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        "random:9:14",
        "planted:k4,w3,d2:tree:bundle",
        "planted:k5,k4,k4:cycle:bridge",
    ] {
        let out = dir.path().join("g.txt");
        let o = tecc(&[
            "gen",
            "--spec",
            spec,
            "--seed",
            "4",
            "-o",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let o = tecc(&["verify", "-i", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{spec}: {}", stdout(&o));
    }
    let a = tecc(&["gen", "--spec", "random:6:8", "--seed", "1"]);
    let b = tecc(&["gen", "--spec", "random:6:8", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let s = tecc(&["gen", "--spec", "scaling:1000", "--seed", "0"]);
    assert!(stdout(&s).lines().any(|l| l == "500 998"));
}

#[test]
fn bench_small_sizes() {
    let o = tecc(&["bench", "--sizes", "1000,2000", "--reps", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sizes"].as_array().unwrap().len(), 2);
    assert_eq!(v["steps"].as_array().unwrap().len(), 1);
    assert!(v["sizes"][0]["counters"]["bounded_work"].as_u64().unwrap() > 0);
    assert_eq!(tecc(&["bench", "--sizes", "0"]).status.code(), Some(2));
}
