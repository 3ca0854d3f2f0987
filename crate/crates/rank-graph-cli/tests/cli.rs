//! End-to-end tests driving the compiled binary through its exit codes
//! and output formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rank-graph"))
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn generate(family_and_params: &[&str], name: &str) -> PathBuf {
    let path = tmp(name);
    let mut args = vec!["generate"];
    args.extend_from_slice(family_and_params);
    args.push("-o");
    let path_str = path.to_str().expect("utf8 path").to_owned();
    args.push(&path_str);
    let output = run(&args);
    assert_eq!(exit_code(&output), 0, "generate {family_and_params:?}");
    path
}

#[test]
fn generated_pizza_validates() {
    let path = generate(&["pizza", "3"], "pizza3.json");
    let output = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("valid"));
}

#[test]
fn club_json_has_eight_edges_for_smallest_lune() {
    let path = generate(&["lunar", "1"], "lunar1.json");
    let output = run(&["club", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("json output");
    assert_eq!(doc["edges"].as_array().map(Vec::len), Some(8));
    assert_eq!(doc["vertices"].as_array().map(Vec::len), Some(6));
    assert_eq!(doc["squares"].as_array().map(Vec::len), Some(4));
}

#[test]
fn pizza_fundamental_group_is_trivial() {
    let path = generate(&["pizza", "3"], "pizza3_pi1.json");
    let output = run(&["pi1", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("json output");
    assert_eq!(doc["status"], "trivial");
    assert_eq!(doc["tree"].as_array().map(Vec::len), Some(13));
    assert_eq!(doc["killed"].as_array().map(Vec::len), Some(11));
}

#[test]
fn tree_check_passes_on_even_lune() {
    let path = generate(&["lunar", "2"], "lunar2.json");
    let output = run(&["tree-check", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("overall: pass"));
}

#[test]
fn tree_check_flags_incomplete_pizza_club() {
    let path = generate(&["pizza", "2"], "pizza2.json");
    let output = run(&["tree-check", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 1);
    let text = stdout(&output);
    assert!(text.contains("verify: fail"));
    assert!(text.contains("overall: fail"));
}

#[test]
fn triangle_exports_as_dot() {
    let path = generate(&["triangle"], "triangle.json");
    let output = run(&["export", path.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("->"));
}

#[test]
fn quotient_rejects_colour_clash() {
    let graph = generate(&["sphere2"], "sphere2.json");
    let relation = tmp("clash.json");
    std::fs::write(
        &relation,
        r#"{"vertexPairs": [], "edgePairs": [["a", "e"]]}"#,
    )
    .unwrap();
    let output = run(&[
        "quotient",
        graph.to_str().unwrap(),
        "--relation",
        relation.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 1);
    assert!(String::from_utf8_lossy(&output.stderr).contains("coloured"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let path = tmp("garbage.json");
    std::fs::write(&path, "{this is not json").unwrap();
    let output = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn glue_merges_marked_wings() {
    let piece = r#"{
      "vertices": ["a", "L", "R", "p"],
      "edges": [
        {"id": "(a,R)", "r": "a", "s": "R", "colour": 2},
        {"id": "(a,L)", "r": "a", "s": "L", "colour": 1},
        {"id": "(R,p)", "r": "R", "s": "p", "colour": 1},
        {"id": "(L,p)", "r": "L", "s": "p", "colour": 2}
      ],
      "squares": [{"top": ["(a,R)", "(R,p)"], "bottom": ["(a,L)", "(L,p)"]}]
    }"#;
    let first = tmp("piece1.json");
    let second = tmp("piece2.json");
    let iso = tmp("iso.json");
    let glued = tmp("glued.json");
    std::fs::write(&first, piece).unwrap();
    std::fs::write(
        &second,
        piece
            .replace("(a,", "(a2,")
            .replace(",R)", ",R2)")
            .replace(",L)", ",L2)")
            .replace("(R,", "(R2,")
            .replace("(L,", "(L2,")
            .replace(",p)", ",q)")
            .replace("\"a\"", "\"a2\"")
            .replace("\"L\"", "\"L2\"")
            .replace("\"R\"", "\"R2\"")
            .replace("\"p\"", "\"q\""),
    )
    .unwrap();
    std::fs::write(
        &iso,
        r#"{"vertexMap": {"a": "a2", "L": "L2"}, "edgeMap": {"(a,L)": "(a2,L2)"}}"#,
    )
    .unwrap();
    let output = run(&[
        "glue",
        first.to_str().unwrap(),
        second.to_str().unwrap(),
        "--iso",
        iso.to_str().unwrap(),
        "-o",
        glued.to_str().unwrap(),
    ]);
    assert_eq!(
        exit_code(&output),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&glued).unwrap()).unwrap();
    assert_eq!(doc["vertices"].as_array().map(Vec::len), Some(6));
    assert_eq!(doc["edges"].as_array().map(Vec::len), Some(7));
    assert_eq!(doc["squares"].as_array().map(Vec::len), Some(2));
}

#[test]
fn analyse_reports_complex_properties() {
    let path = generate(&["hypercube", "3"], "cube.json");
    let output = run(&["analyse", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("json output");
    assert_eq!(doc["vertices"], 8);
    assert_eq!(doc["edges"], 12);
    assert_eq!(doc["squares"], 6);
    assert_eq!(doc["rank"], 3);
    assert_eq!(doc["complete"], true);
    assert_eq!(doc["associative"], true);
}

#[test]
fn unknown_family_is_a_usage_error() {
    let output = run(&["generate", "dodecahedron"]);
    assert_eq!(exit_code(&output), 2);
}
