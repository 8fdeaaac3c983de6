use std::fs;
use std::path::PathBuf;

use combdyn_cli::run;
use petgraph::algo::{has_path_connecting, is_cyclic_directed};
use petgraph::graph::{DiGraph, NodeIndex};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String) {
    run(std::iter::once("combdyn").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let (code, out) = call(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    out.trim_end().to_string()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn without_timing(text: &str) -> Value {
    let mut doc: Value = serde_json::from_str(text).unwrap();
    doc.as_object_mut().unwrap().remove("timing_ms").expect("timing field present");
    doc
}

fn check_golden(name: &str, args: &[&str]) {
    let got = without_timing(&ok(args));
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
    }
    let want: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(got, want, "{name}");
}

#[test]
fn text_examples() {
    assert_eq!(ok(&["shark", "compare", "6", "7"]), "6 <_s 7");
    assert_eq!(ok(&["shark", "compare", "3", "2inf"]), "3 >_s 2inf");
    assert_eq!(ok(&["pattern", "entropy", "2 3 1"]), "0.481211825060");
    assert_eq!(ok(&["pattern", "forces", "2 3 1", "2 1"]), "true");
    assert_eq!(ok(&["pattern", "forces", "2 1", "2 3 1"]), "false");
    assert_eq!(ok(&["shark", "segment", "6"]), "1 2 4 6 8 10 12");
    assert_eq!(ok(&["circle", "periods", "--interval", "1/3,1/2"]), "2 3 5 7 8 9 10 11 12");
}

#[test]
fn sharkovsky_sort_golden() {
    let args: Vec<String> = (1..=20).map(|n| n.to_string()).collect();
    let mut argv = vec!["shark", "sort"];
    argv.extend(args.iter().map(String::as_str));
    assert_eq!(ok(&argv), fs::read_to_string(golden_path("sharkovsky_sort_1_20.txt")).unwrap().trim_end());
}

#[test]
fn json_reports_are_stable() {
    check_golden("overrot_stefan5.json", &["--json", "pattern", "overrot", "3 5 4 2 1"]);
    check_golden("periods_stefan5.json", &["--json", "pattern", "periods", "3 5 4 2 1"]);
    check_golden("entropy_golden.json", &["--json", "pattern", "entropy", "2 3 1"]);
    check_golden("segment_12.json", &["--json", "shark", "segment", "12", "--cap", "24"]);
    check_golden("poset_3.json", &["--json", "poset", "--period", "3"]);
    check_golden("circle_period_set.json", &["--json", "circle", "periods", "--interval", "1/3,1/2"]);
    // identical inputs give identical documents
    let a = without_timing(&ok(&["--json", "pattern", "spectrum", "2 3 1"]));
    let b = without_timing(&ok(&["--json", "pattern", "spectrum", "2 3 1"]));
    assert_eq!(a, b);
}

#[test]
fn circle_commands_read_files() {
    let dir = tempfile::tempdir().unwrap();
    let tent = dir.path().join("tent.json");
    fs::write(&tent, r#"[["0", "0"], ["1/2", "3/2"]]"#).unwrap();
    let tent = tent.to_str().unwrap();
    assert_eq!(ok(&["circle", "interval", tent]), "[0, 1]");
    let doc = without_timing(&ok(&["--json", "circle", "interval", tent]));
    assert_eq!(doc["result"]["lower"]["exact"], "0");
    assert_eq!(doc["result"]["upper"]["exact"], "1");
    let doc = without_timing(&ok(&["--json", "circle", "cycles", tent, "--cap", "3"]));
    let numbers: Vec<&str> =
        doc["result"].as_array().unwrap().iter().map(|c| c["rotation_number"].as_str().unwrap()).collect();
    for r in ["0", "1", "1/2", "1/3", "2/3"] {
        assert!(numbers.contains(&r), "{r} missing from {numbers:?}");
    }
    assert_eq!(ok(&["circle", "periods", tent, "--cap", "6"]), "1 2 3 4 5 6");

    let rigid = dir.path().join("rigid.json");
    fs::write(&rigid, r#"[["0", "1/3"]]"#).unwrap();
    assert_eq!(ok(&["circle", "interval", rigid.to_str().unwrap()]), "[1/3, 1/3]");
    assert_eq!(ok(&["circle", "periods", rigid.to_str().unwrap(), "--left", "2", "--cap", "20"]), "3 6");
}

#[test]
fn exit_codes() {
    // domain errors
    assert_eq!(call(&["pattern", "entropy", "2 2 1"]).0, 1);
    assert_eq!(call(&["pattern", "entropy", "2 1 3"]).0, 1);
    assert_eq!(call(&["pattern", "overrot", "1"]).0, 1);
    assert_eq!(call(&["realize", "2inf"]).0, 1);
    assert_eq!(call(&["circle", "periods", "--interval", "1/3,1/0"]).0, 1);
    assert_eq!(call(&["circle", "interval", "/nonexistent/map.json"]).0, 1);
    // usage errors
    assert_eq!(call(&["shark", "segment", "3", "--cap", "0"]).0, 2);
    assert_eq!(call(&["shark", "segment", "3", "--cap", "1000"]).0, 2);
    assert_eq!(call(&["pattern"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["poset", "--period", "9"]).0, 2);
    assert_eq!(call(&["pattern", "min-entropy", "--pair", "x"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn canonical_text_round_trips() {
    for p in ["2 3 1", "3 1 2", "[4, 1, 2, 3]", "3 5 4 2 1", "5 4 6 3 2 1"] {
        let shown = ok(&["pattern", "show", p]);
        let canon = shown.lines().next().unwrap().strip_prefix("pattern ").unwrap().to_string();
        let again = ok(&["pattern", "show", &canon]);
        assert_eq!(shown, again);
    }
}

fn parse_dot(text: &str) -> (DiGraph<String, ()>, Vec<NodeIndex>) {
    let mut g = DiGraph::new();
    let mut nodes = Vec::new();
    for line in text.lines().map(str::trim) {
        if let Some((id, rest)) = line.split_once(" [label=") {
            let index: usize = id.trim_start_matches('n').parse().unwrap();
            assert_eq!(index, nodes.len());
            nodes.push(g.add_node(rest.to_string()));
        } else if let Some((a, b)) = line.trim_end_matches(';').split_once(" -> ") {
            let a: usize = a.trim_start_matches('n').parse().unwrap();
            let b: usize = b.trim_start_matches('n').parse().unwrap();
            g.add_edge(nodes[a], nodes[b], ());
        }
    }
    (g, nodes)
}

#[test]
fn dot_export_is_a_hasse_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poset4.dot");
    ok(&["poset", "--period", "4", "--dot", path.to_str().unwrap()]);
    let text = fs::read_to_string(&path).unwrap();
    let (g, nodes) = parse_dot(&text);
    assert_eq!(nodes.len(), 1 + 1 + 1 + 4);
    assert!(!is_cyclic_directed(&g));
    // transitively reduced: no edge is implied by a longer path
    for e in g.edge_indices() {
        let (a, b) = g.edge_endpoints(e).unwrap();
        let mut h = g.clone();
        h.remove_edge(h.find_edge(a, b).unwrap());
        assert!(!has_path_connecting(&h, a, b, None), "redundant edge {a:?} -> {b:?}");
    }
    // every cycle forces a fixed point
    let fixed = nodes.iter().find(|&&n| g[n].starts_with("\"[1]")).unwrap();
    for &n in &nodes {
        assert!(has_path_connecting(&g, n, *fixed, None));
    }
    for label in g.node_weights() {
        assert!(label.contains("period") && label.contains("entropy") && label.contains("over-rotation"));
    }
}
