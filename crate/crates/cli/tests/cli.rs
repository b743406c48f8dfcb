use std::process::{Command, Output};

fn disting(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disting")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_vertex_and_edge() {
    let o = disting(&["compute", "--graph6", "C~"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("C~\tD=4\t"));

    let o = disting(&["compute", "--edges", "--graph6", "C~"]);
    assert!(stdout(&o).starts_with("C~\tD'=3\t"));

    let o = disting(&["compute", "--edges", "--graph6", "A_"]);
    assert_eq!(stdout(&o), "A_\tD'=undefined\n");
}

#[test]
fn compute_reads_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    std::fs::write(&path, "Bw\n\nC~\n").unwrap();
    let o = disting(&["compute", "--file", path.to_str().unwrap()]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("Bw\tD=3"));
}

#[test]
fn bad_input_exits_with_two() {
    let o = disting(&["compute", "--graph6", "zz"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph6"));

    let o = disting(&["op", "--kind", "remove-edge", "--site", "e=0,1", "--graph6", "A?"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn op_and_family() {
    let o = disting(&["op", "--kind", "contract-edge", "--site", "e=0,1", "--graph6", "C~"]);
    assert_eq!(stdout(&o), "Bw\n");
    let o = disting(&["family", "--name", "star", "--param", "3"]);
    assert_eq!(stdout(&o), "Cs\n");
}

#[test]
fn construct_reports_certificate() {
    let o = disting(&["construct", "--rule", "PUSH-EDEL-E", "--site", "e=0,1", "--graph6", "C~", "--verify"]);
    let out = stdout(&o);
    assert!(out.contains("status\trefuted"));
    assert!(out.contains("certificate\t(2 3)"));

    let o = disting(&["construct", "--rule", "LIFT-VDEL", "--site", "v=1", "--graph6", "Bw", "--verify"]);
    assert!(stdout(&o).contains("verified\ttrue"));
}

#[test]
fn audit_writes_jsonl_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let jsonl = dir.path().join("a.jsonl");
    let csv = dir.path().join("a.csv");
    let o = disting(&[
        "audit",
        "--nmax",
        "5",
        "--constructions",
        "--out",
        jsonl.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&jsonl).unwrap();
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["type"], "summary");
    assert_eq!(last["graphs"], 29);
    assert_eq!(last["fail"], 0);
    let records = text.lines().filter(|l| l.contains("\"type\":\"bound_check\"")).count();
    assert_eq!(records as u64, last["bound_checks"].as_u64().unwrap());
    let rows = std::fs::read_to_string(&csv).unwrap().lines().count();
    assert_eq!(rows, records + 1);
}

#[test]
fn audit_exit_code_reports_failures() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("c.g6");
    // K_{1,5} plus a vertex joined to three leaves: deleting that vertex breaks thm2.2ii-hi.
    std::fs::write(&corpus, "F??~o\n").unwrap();
    let o = disting(&["audit", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("thm2.2ii-hi\":\"fail"));
}

#[test]
fn sharpness_and_families() {
    let o = disting(&["sharpness", "--ineq", "thm2.4", "--nmax", "4"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("C~\te=0,1\t4\t2\t-1")));

    let o = disting(&["families", "--name", "friendship", "--from", "3", "--to", "3"]);
    let out = stdout(&o);
    assert!(out.lines().nth(1).unwrap().starts_with("3\tF{eCG\t3\t3\t3"));
    assert!(!out.contains("FAILS"));
}
