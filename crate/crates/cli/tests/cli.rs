use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use chirality_core::catalog::{complete_bipartite, named, CatalogName};
use chirality_core::format::parse_graphs;
use chirality_core::pipeline::{generate, GenerationSpec};
use chirality_core::{canonical_key, MinorModel};

fn chirality(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chirality"))
        .args(args)
        .output()
        .expect("run chirality")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_round_trips_through_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let expected: Vec<_> = generate(&GenerationSpec::new(7, 10).connected())
        .unwrap()
        .iter()
        .map(canonical_key)
        .collect();
    for (format, mg) in [("graph6", false), ("mg", true)] {
        let o = chirality(&["gen", "--vertices", "7", "--edges", "10", "--connected", "--format", format]);
        assert!(o.status.success(), "{}", stderr(&o));
        let file = dir.path().join(format!("out.{format}"));
        fs::write(&file, &o.stdout).unwrap();
        let parsed = parse_graphs(&fs::read_to_string(&file).unwrap(), mg).unwrap();
        let keys: Vec<_> = parsed.iter().map(canonical_key).collect();
        assert_eq!(keys, expected, "{format}");
    }
}

#[test]
fn nonplanar_filter_leaves_k33_at_six_vertices_nine_edges() {
    let o = chirality(&["gen", "--vertices", "6", "--edges", "9", "--nonplanar"]);
    let gs = parse_graphs(&stdout(&o), false).unwrap();
    assert_eq!(gs.len(), 1);
    assert_eq!(canonical_key(&gs[0]), canonical_key(&complete_bipartite(3, 3)));
}

#[test]
fn double_edge_is_planar() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("double.mg");
    fs::write(&file, "2 2\n0 1\n0 1\n").unwrap();
    let o = chirality(&["planar", path(&file)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("planar"));
}

#[test]
fn k33_is_reported_non_planar_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k33.g6");
    fs::write(&file, "EFz_\n").unwrap();
    let o = chirality(&["planar", path(&file)]);
    let text = stdout(&o);
    assert!(text.starts_with("non-planar"), "{text}");
    assert!(text.contains("subdivision"), "{text}");
}

#[test]
fn malformed_mg_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.mg");
    fs::write(&file, "3 2\n0 1\n1 x\n").unwrap();
    let o = chirality(&["planar", path(&file)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn malformed_graph6_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.g6");
    fs::write(&file, "EFz_\n~~~\n").unwrap();
    let o = chirality(&["aut", path(&file)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn unknown_flag_prints_usage() {
    let o = chirality(&["classify", "--bogus"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("Usage"), "{}", stderr(&o));
}

#[test]
fn missing_file_is_an_error() {
    let o = chirality(&["certify", "/nonexistent/graph.g6"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("/nonexistent/graph.g6"));
}

#[test]
fn automorphism_order_of_k33() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k33.g6");
    fs::write(&file, "EFz_\n").unwrap();
    let o = chirality(&["aut", path(&file)]);
    assert_eq!(stdout(&o).lines().next(), Some("order 72"));
}

#[test]
fn minor_model_replays() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.mg");
    let g = named(CatalogName::G12_7_2).graph;
    fs::write(&graph, chirality_core::format::to_mg(&g)).unwrap();
    let o = chirality(&["minor", path(&graph), "--target", "k33", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let model: MinorModel = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(model.verify(&g));

    let model_file = dir.path().join("model.json");
    fs::write(&model_file, stdout(&o)).unwrap();
    let o = chirality(&["minor", path(&graph), "--target", "k33", "--replay", path(&model_file)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "valid");

    let o = chirality(&["minor", path(&graph), "--target", "k5", "--replay", path(&model_file)]);
    assert!(!o.status.success());
    assert_eq!(stdout(&o).trim(), "invalid");
}

#[test]
fn unknown_minor_target_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k33.g6");
    fs::write(&file, "EFz_\n").unwrap();
    let o = chirality(&["minor", path(&file), "--target", "petersen"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("petersen"));
}

#[test]
fn certify_emits_a_chirality_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.mg");
    fs::write(&file, chirality_core::format::to_mg(&named(CatalogName::G11_8_1).graph)).unwrap();
    let o = chirality(&["certify", path(&file), "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v.get("chiral").is_some(), "{v}");
}

#[test]
fn catalog_lists_six_graphs_and_validation_flags_one_failure() {
    let o = chirality(&["catalog", "--format", "graph6"]);
    assert!(o.status.success());
    let listing = stdout(&o);
    let names: Vec<&str> = listing.lines().filter(|l| l.starts_with("# 1")).map(|l| &l[2..]).collect();
    assert_eq!(names, ["11^8_1", "12^7_1", "12^7_2", "12^8_1", "12^8_2", "12^9_1"]);

    let o = chirality(&["catalog", "--validate"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let failures: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failures.len(), 1, "{text}");
    assert!(failures[0].starts_with("FAIL 12^8_2"), "{text}");
}

#[test]
fn classify_small_sizes_and_report_agree() {
    let dir = tempfile::tempdir().unwrap();
    let records = dir.path().join("records.jsonl");
    let o = chirality(&["classify", "--max-size", "11", "--out", path(&records)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let summary = stdout(&o);
    assert!(summary.trim_end().ends_with("MMIC(11) = 1, MMIC(≤11) = 1"), "{summary}");
    assert!(summary.contains("11^8_1"), "{summary}");

    let o = chirality(&["report", path(&records)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), summary);
}

#[test]
fn classify_rejects_sizes_beyond_the_bound() {
    let o = chirality(&["classify", "--max-size", "13"]);
    assert!(!o.status.success());
}

#[test]
fn zero_threads_is_rejected() {
    let o = Command::new(env!("CARGO_BIN_EXE_chirality"))
        .args(["catalog"])
        .env("CHIRALITY_THREADS", "0")
        .output()
        .unwrap();
    assert!(!o.status.success());
}
