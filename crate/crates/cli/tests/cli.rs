//! Exit-code contract and output determinism of the binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hallpaige"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn tmp(name: &str) -> PathBuf {
    std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn group_info_text_and_json() {
    let out = run(&["group", "info", "cyclic:6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "order 6, Sylow-2 order 2 cyclic, BAD\n"
    );
    let out = run(&["group", "info", "q8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["good"], true);
    assert_eq!(v["sylow2_cyclic"], false);
}

#[test]
fn invalid_specs_exit_2() {
    assert_eq!(run(&["group", "info", "nope:7"]).status.code(), Some(2));
    assert_eq!(run(&["group", "info", "sym:9"]).status.code(), Some(2));
    let bad = tmp("bad_cayley.txt");
    std::fs::write(&bad, "2\n0 0\n0 0\n").unwrap();
    assert_eq!(
        run(&["group", "info", &format!("cayley:{}", bad.display())])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["coxeter", "dcosets", "H3", "3", "--drop", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn cayley_and_perm_files_load() {
    let cayley = tmp("z3.txt");
    std::fs::write(&cayley, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let out = run(&["group", "info", &format!("cayley:{}", cayley.display())]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("order 3"));

    let perm = tmp("s5.txt");
    std::fs::write(&perm, "5\n(0 1)\n(0 1 2 3 4)\n").unwrap();
    let out = run(&["group", "info", &format!("perm:{}", perm.display())]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("order 120"));
}

#[test]
fn search_verify_roundtrip_and_budget() {
    let csv = tmp("d4.csv");
    let out = run(&["cm", "search", "dihedral:4", "-o", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["cm", "verify", "dihedral:4", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // a mapping for the wrong group: size mismatch is invalid input
    let out = run(&["cm", "verify", "cyclic:3", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // tampering makes verification fail with exit 1
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut first = lines[1].split(',').map(|s| s.parse::<usize>().unwrap());
    let (g0, p0, s0) = (
        first.next().unwrap(),
        first.next().unwrap(),
        first.next().unwrap(),
    );
    lines[1] = format!("{g0},{p0},{}", (s0 + 1) % 8);
    let tampered = tmp("d4_bad.csv");
    std::fs::write(&tampered, lines.join("\n") + "\n").unwrap();
    let out = run(&["cm", "verify", "dihedral:4", tampered.to_str().unwrap()]);
    assert!(matches!(out.status.code(), Some(1)));
    // budget exhaustion is the distinct exit 3
    let out = run(&["cm", "search", "cyclic:16", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["cm", "search", "ea:2^3"],
        vec!["coxeter", "dcosets", "E6", "6", "--drop", "6"],
        vec!["coxeter", "verify-p2", "B", "3"],
        vec!["cm", "psl2", "5"],
        vec!["group", "info", "alt:5", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_p2_reports() {
    let out = run(&["coxeter", "verify-p2", "E6", "6", "--method", "product"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert!(v.as_array().unwrap().iter().all(|c| c["pass"] == true));
    // default method switches to form for E7
    let out = run(&["coxeter", "verify-p2", "E7", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|c| c["method"] == "form"));
    // a middle F4 node has failing classes: exit 1
    let out = run(&["coxeter", "verify-p2", "F4", "4", "--drop", "2", "--method", "product"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn psl2_unsupported_q() {
    assert_eq!(run(&["cm", "psl2", "6"]).status.code(), Some(2));
    assert_eq!(run(&["cm", "psl2", "32"]).status.code(), Some(2));
    // PSL(2,2) is bad: the pipeline refuses
    assert_eq!(run(&["cm", "psl2", "2"]).status.code(), Some(2));
}

#[test]
fn lift_commands() {
    // z2 on Q8 with an explicitly supplied quotient mapping
    let qcsv = tmp("q8_quot.csv");
    let out = run(&["cm", "search", "ea:2^2", "-o", qcsv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "cm",
        "lift",
        "z2",
        "q8",
        "--x",
        "1",
        "--quotient-cm",
        qcsv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let mapping = tmp("q8_lifted.csv");
    std::fs::write(&mapping, &out.stdout).unwrap();
    let out = run(&["cm", "verify", "q8", mapping.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // dcst with a containment failure exits 1
    let out = run(&["cm", "lift", "dcst", "sym:3", "--sub", "3"]);
    assert_eq!(out.status.code(), Some(1));
}
