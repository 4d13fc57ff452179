use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sesqui(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sesqui"))
        .args(args)
        .env_remove("SESQUI_JOBS")
        .output()
        .expect("binary runs")
}

fn sesqui_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sesqui"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const C5: &str = "Dhc";

fn p5() -> String {
    sesqui::to_graph6(&sesqui::Graph::path(5)).unwrap()
}

#[test]
fn classify_c5_names_the_cycle() {
    let o = sesqui(&["classify", C5, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["is_sesquicograph"], false);
    assert_eq!(v["witness"]["name"], "C5");
    assert_eq!(v["witness"]["vertices"].as_array().unwrap().len(), 5);
    assert!(v["certificate"].is_null());
}

#[test]
fn classify_sesquicograph_has_certificate() {
    let o = sesqui(&["classify", &p5(), "--format", "json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["is_sesquicograph"], true);
    assert_eq!(v["is_cograph"], false);
    assert_eq!(v["certificate"]["kind"], "onesum");
    assert!(v["witness"].is_null());
}

#[test]
fn decompose_json_round_trips() {
    let o = sesqui(&["decompose", &p5(), "--format", "json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let tree = sesqui::DecompositionTree::from_json(v["certificate"].clone()).unwrap();
    assert_eq!(tree.evaluate().unwrap(), sesqui::from_graph6(&p5()).unwrap());
}

#[test]
fn decompose_dot_and_failure() {
    let o = sesqui(&["decompose", &p5(), "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph decomposition {"));
    let o = sesqui(&["decompose", C5, "--format", "json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["failure"]["vertices"], serde_json::json!([0, 1, 2, 3, 4]));
}

#[test]
fn witness_streams_in_input_order() {
    let input = "Dhc\nD?{\n\nA_\nDhc\n";
    let expected = sesqui_stdin(&["-j", "1", "witness"], input);
    let o = sesqui_stdin(&["-j", "4", "witness"], input);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&expected));
    let text = stdout(&o);
    let names: Vec<&str> = text.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(names, ["Dhc", "D?{", "A_", "Dhc"]);
    assert!(text.lines().nth(1).unwrap().ends_with("none"));
}

#[test]
fn enumerate_order_five() {
    let o = sesqui(&["enumerate-minimal", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    let got: Vec<_> = lines.iter().map(|l| sesqui::from_graph6(l).unwrap()).collect();
    assert!(got.iter().any(|g| sesqui::are_isomorphic(g, &sesqui::Graph::cycle(5)).unwrap()));
    let naive = sesqui(&["enumerate-minimal", "--order", "5", "--mode", "naive"]);
    assert_eq!(stdout(&naive), stdout(&o));
}

#[test]
fn enumerate_json_report() {
    let o = sesqui(&["enumerate-minimal", "--order", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["total_graphs"], 156);
    assert_eq!(v["filter_mode"], "pruned");
    let names: Vec<&str> = v["minimal_obstructions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(sorted, ["C6", "H1", "H2", "H3", "H4", "H5", "domino"]);
}

#[test]
fn enumerate_from_file() {
    let dir = std::env::temp_dir().join(format!("sesqui-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("list.g6");
    std::fs::write(&path, "Dhc\nD?{\nA_\n").unwrap();
    let o = sesqui(&["enumerate-minimal", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Dhc\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_order_six() {
    let o = sesqui(&["verify", "--max-order", "6", "--minors"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 mismatches / 208 graphs"), "{}", stdout(&o));
}

#[test]
fn convert_round_trip() {
    let o = sesqui(&["convert", C5, "--format", "edgelist"]);
    let edges = stdout(&o);
    assert!(edges.starts_with("5 5\n"));
    let back = sesqui(&["convert", "--input-format", "edgelist", "--format", "graph6", &edges]);
    assert_eq!(stdout(&back).trim(), C5);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(sesqui(&["classify", C5, "--format", "dot"]).status.code(), Some(2));
    assert_eq!(sesqui(&["enumerate-minimal"]).status.code(), Some(2));
    assert_eq!(sesqui(&["frobnicate"]).status.code(), Some(2));
    // parse
    assert_eq!(sesqui(&["classify", "D!!"]).status.code(), Some(3));
    assert_eq!(sesqui(&["classify", "--file", "/nonexistent/graphs.g6"]).status.code(), Some(3));
    // size bounds
    assert_eq!(sesqui(&["enumerate-minimal", "--order", "8"]).status.code(), Some(4));
    assert_eq!(sesqui(&["verify", "--max-order", "8"]).status.code(), Some(4));
    assert_eq!(sesqui(&["verify", "--max-order", "7", "--minors"]).status.code(), Some(4));
    // C11 has no certificate and is too large for the witness search
    let c11 = sesqui::to_graph6(&sesqui::Graph::cycle(11)).unwrap();
    assert_eq!(sesqui(&["classify", &c11]).status.code(), Some(4));
}

#[test]
fn bad_line_does_not_stop_the_stream() {
    let o = sesqui_stdin(&["witness"], "Dhc\nnot-a-graph\nA_\n");
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).lines().count(), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_sesqui"))
        .args(["classify", C5])
        .env("SESQUI_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_sesqui"))
        .args(["classify", C5])
        .env("SESQUI_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
