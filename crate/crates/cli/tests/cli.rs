//! End-to-end runs of the `invdom` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use invdom_core::generate::disjoint_copies;
use invdom_core::{write_graph6, Graph};
use serde_json::Value;

fn invdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invdom"))
        .args(args)
        .env_remove("INVDOM_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn last_json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).lines().last().unwrap()).unwrap()
}

#[test]
fn analyze_k2() {
    let o = invdom(&["analyze", "A_", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = last_json(&o);
    assert_eq!(r["gamma"], 1);
    assert_eq!(r["alpha"], 1);
    assert_eq!(r["inv_gamma"], 1);
    assert_eq!(r["conjecture_ok"], true);
    assert_eq!(r["three_halves_ok"], Value::Null);
}

#[test]
fn analyze_c4_pretty_and_json() {
    let o = invdom(&["analyze", "Cl"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("γ⁻¹"));
    let r = last_json(&o);
    assert_eq!(
        (r["gamma"].as_u64(), r["alpha"].as_u64(), r["inv_gamma"].as_u64()),
        (Some(2), Some(2), Some(2))
    );
}

#[test]
fn analyze_warns_on_isolates() {
    // K2 plus an isolated vertex.
    let g = write_graph6(&Graph::from_edges(3, [(0, 1)]).unwrap()).unwrap();
    let o = invdom(&["analyze", &g, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
    assert!(last_json(&o).get("inv_gamma").is_none());
}

#[test]
fn analyze_reads_edge_lists_and_rejects_garbage() {
    let path = scratch("c5.edges");
    fs::write(&path, "# five-cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let o = invdom(&["analyze", "--edges", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(last_json(&o)["graph6"], "Dhc");
    assert_eq!(invdom(&["analyze", "not graph6"]).status.code(), Some(2));
}

#[test]
fn verify_corpus_in_order_at_any_parallelism() {
    let corpus = scratch("upto5.g6");
    let o = invdom(&["generate", "--n", "5", "--up-to", "--out", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let lines = fs::read_to_string(&corpus).unwrap().lines().count();
    assert_eq!(lines, 1 + 1 + 2 + 4 + 11 + 34);

    let one = invdom(&["verify", corpus.to_str().unwrap(), "--jobs", "1"]);
    let two = invdom(&["verify", corpus.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(one.status.code(), Some(0), "{}", stderr(&one));
    assert_eq!(stdout(&one), stdout(&two));
    assert_eq!(stdout(&one).lines().count(), lines);
    let summary: Value = serde_json::from_str(stderr(&one).lines().last().unwrap()).unwrap();
    assert_eq!(summary["conjecture_failures"], 0);
    assert!(summary["skipped_isolates"].as_u64().unwrap() > 0);
}

#[test]
fn verify_reports_bad_lines() {
    let corpus = scratch("bad.g6");
    fs::write(&corpus, "A_\nnot-graph6\nBw\n").unwrap();
    let o = invdom(&["verify", corpus.to_str().unwrap(), "--checks", "conjecture"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains(":2:"), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 2);
    let strict = invdom(&["verify", corpus.to_str().unwrap(), "--strict"]);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn construct_main_on_star() {
    let o = invdom(&["construct", "Ds_", "--which", "main"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = last_json(&o);
    assert_eq!(c["t_set"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(c["bound_value"], 4);
    assert_eq!(c["bound_kind"], "main_theorem");
}

#[test]
fn construct_bipartite_on_k2() {
    let o = invdom(&["construct", "A_", "--which", "bipartite"]);
    assert_eq!(o.status.code(), Some(0));
    let c = last_json(&o);
    assert_eq!(c["t_set"], serde_json::json!([1]));
    assert_eq!(c["bound_value"], 2);
}

#[test]
fn construct_gamma5_checks_domination_number() {
    let four = write_graph6(&disjoint_copies(&Graph::complete(2), 4).unwrap()).unwrap();
    assert_eq!(
        invdom(&["construct", &four, "--which", "gamma5"]).status.code(),
        Some(3)
    );
    let five = write_graph6(&disjoint_copies(&Graph::complete(2), 5).unwrap()).unwrap();
    let o = invdom(&["construct", &five, "--which", "gamma5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(last_json(&o)["t_set"].as_array().unwrap().len(), 5);
}

#[test]
fn construct_rejects_non_minimum_d() {
    let o = invdom(&["construct", "Ch", "--which", "inddom", "--dset", "0,1,2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--n", "9", "--p", "0.3", "--count", "60", "--seed", "7"];
    let a = invdom(&args);
    let b = invdom(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(stdout(&a), stdout(&b));
    // Stars have γ⁻¹ = α; the first one is logged for its family.
    let star = stdout(&a)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|r| r["family"] == "star" && r["metric"] == "inv_over_alpha")
        .unwrap();
    assert_eq!(star["numerator"], star["denominator"]);
}

#[test]
fn selftest_passes_and_catches_fault() {
    let o = invdom(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    let f = invdom(&["selftest", "--inject-fault"]);
    assert_eq!(f.status.code(), Some(1));
    assert!(stdout(&f).contains("FAIL"));
}

#[test]
fn generate_counts() {
    let o = invdom(&["generate", "--n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 11);
    let o = invdom(&["generate", "--n", "4", "--connected"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}
