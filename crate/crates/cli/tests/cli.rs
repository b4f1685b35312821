//! End-to-end tests of the `duflo` binary.

use std::process::{Command, Output};

fn duflo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duflo")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = duflo(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&all)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn rs_prints_both_tableaux() {
    assert_eq!(stdout(&["rs", "[2,5,1,4,3]"]), "T: 1 3/2 4/5\nQ: 1 2/3 4/5\n");
    let v = json(&["rs", "--trace", "[2,5,1,4,3]"]);
    assert_eq!(v["T"], "1 3/2 4/5");
    assert_eq!(v["trace"][2], "1 5/2");
}

#[test]
fn order_and_cellsize_examples() {
    assert_eq!(stdout(&["order", "1 2 5/3 4", "1 4/2 5/3"]), "true\n");
    assert_eq!(stdout(&["order", "1 4/2 5/3", "1 2 5/3 4"]), "false\n");
    assert_eq!(stdout(&["cellsize", "1 2 3/4"]), "3\n");
    assert_eq!(json(&["cellsize", "1 2 3/4"])["size"], 3);
}

#[test]
fn cell_lists_sorted_words() {
    let out = stdout(&["cell", "1 2 5/3 4"]);
    assert_eq!(out, "[3,1,4,2,5]\n[3,1,4,5,2]\n[3,4,1,2,5]\n[3,4,1,5,2]\n[3,4,5,1,2]\n");
    assert_eq!(json(&["cell", "1 2 5/3 4"])["size"], 5);
}

#[test]
fn offspring_methods_agree() {
    let t = "1 2 6 7/3 5/4";
    let rec = stdout(&["offsprings", t]);
    assert_eq!(rec.lines().count(), 9);
    assert_eq!(stdout(&["offsprings", t, "--method", "dual"]), rec);
    assert_eq!(stdout(&["offsprings", t, "--method", "brute"]), rec);
    let mut sorted: Vec<&str> = rec.lines().collect();
    sorted.sort_unstable();
    assert_eq!(sorted, rec.lines().collect::<Vec<_>>());
}

#[test]
fn descendants_and_diagram_descendants() {
    assert_eq!(stdout(&["descendants", "1 2 4/3"]), "1 2/3 4\n");
    assert_eq!(stdout(&["diagram-descendants", "3,2,1"]), "2,2,2\n3,1,1,1\n");
}

#[test]
fn project_words_and_tableaux() {
    assert_eq!(stdout(&["project", "[2,5,1,4,3]", "--range", "2", "4"]), "[2,4,3]\n");
    assert_eq!(stdout(&["project", "1 2 5/3 4/6", "--range", "1", "5"]), "1 2 5/3 4\n");
    assert_eq!(json(&["project", "1 2 5/3 4/6", "--range", "2", "6"])["result"], "2 4 5/3/6");
}

#[test]
fn domain_errors_exit_one_naming_the_token() {
    let out = duflo(&["rs", "[2,x,1]"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("`x`") && err.lines().count() == 1, "{err}");
    assert_eq!(duflo(&["cell", "1 2/2"]).status.code(), Some(1));
    assert_eq!(duflo(&["order", "1 2", "1 2 3"]).status.code(), Some(1));
    assert_eq!(duflo(&["descendants", "2 3/4"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(duflo(&["bogus"]).status.code(), Some(2));
    assert_eq!(duflo(&["poset", "--n", "9"]).status.code(), Some(2));
    assert_eq!(duflo(&["poset", "--n", "0"]).status.code(), Some(2));
    assert_eq!(duflo(&["verify", "--n", "8"]).status.code(), Some(2));
    assert_eq!(duflo(&["cell", "1 2/3", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(duflo(&["project", "[1,2]"]).status.code(), Some(2));
}

#[test]
fn poset_exports() {
    let one = json(&["poset", "--n", "1"]);
    assert_eq!(one["nodes"].as_array().unwrap().len(), 1);
    assert!(one["covers"].as_array().unwrap().is_empty());
    let three = json(&["poset", "--n", "3"]);
    assert_eq!(three["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(three["covers"].as_array().unwrap().len(), 4);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.dot");
    let out = duflo(&["poset", "--n", "4", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    let id = |label: &str| {
        let line = dot.lines().find(|l| l.contains(&format!("[label=\"{label}\"]"))).unwrap();
        line.split_whitespace().next().unwrap().to_string()
    };
    let (c1, c2, c3) = (id("1 2 4/3"), id("1 2/3 4"), id("1 4/2/3"));
    assert!(dot.contains(&format!("{c1} -> {c2};")));
    assert!(dot.contains(&format!("{c2} -> {c3};")));
    assert!(!dot.contains(&format!("{c1} -> {c3};")), "DOT holds covers only");
}

#[test]
fn output_is_deterministic() {
    let args = ["poset", "--n", "5", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    assert_eq!(stdout(&["offsprings", "1 3 5/2 4"]), stdout(&["offsprings", "1 3 5/2 4"]));
}

#[test]
fn verify_reports() {
    let out = stdout(&["verify", "--n", "4", "--suite", "fast"]);
    assert!(out.starts_with("n = 4: 24 words, 10 tableaux\n"));
    assert!(out.ends_with(" 0 failed\n"));
    assert!(!out.contains("FAIL "));
    let v = json(&["verify", "--n", "1"]);
    assert_eq!(v["passed"], true);
    let full = json(&["verify", "--n", "6", "--suite", "full"]);
    assert_eq!(full["tableaux"], 76);
    let three_way = full["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == "offspring-three-way-equality" && r["n"] == 6)
        .unwrap();
    assert_eq!(three_way["passed"], true);
    assert!(three_way["detail"].as_str().unwrap().starts_with("76 tableaux"));
}
