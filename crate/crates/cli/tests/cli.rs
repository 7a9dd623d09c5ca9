//! End-to-end tests of the binary: exit-code contract, formats, and
//! stream handling.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use sti_core::canon::are_isomorphic;
use sti_core::enumerate::is_sti;
use sti_core::families::hatted_cycle;
use sti_core::graph6;
use sti_core::metric::distance_profile;

fn sti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sti"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sti_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sti"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn gen_family_emits_the_hatted_cycle() {
    let out = sti(&["gen-family", "hatted", "11"]);
    assert!(out.status.success());
    let g = graph6::decode(stdout(&out).trim()).unwrap();
    assert!(are_isomorphic(&g, &hatted_cycle(11).unwrap()));
}

#[test]
fn gen_family_rejects_even_order() {
    let out = sti(&["gen-family", "hatted", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("odd"));
}

#[test]
fn gen_family_edge_list_format() {
    let out = sti(&["gen-family", "theta", "6", "1", "2", "--format", "edgelist"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("6"));
    assert_eq!(text.lines().count(), 8); // order line + 7 edges
}

#[test]
fn enumerate_exit_codes_follow_expectations() {
    let ok = sti(&["enumerate", "--n", "5", "--expect", "1", "--format", "graph6"]);
    assert_eq!(ok.status.code(), Some(0));
    let mismatch = sti(&["enumerate", "--n", "9", "--expect", "8", "--format", "graph6"]);
    assert_eq!(mismatch.status.code(), Some(2));
    assert!(stderr(&mismatch).contains("expected 8"));
}

#[test]
fn enumerate_graph6_lines_are_sti() {
    let out = sti(&["enumerate", "--n", "7", "--format", "graph6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in lines {
        let g = graph6::decode(line).unwrap();
        let p = distance_profile(&g).unwrap();
        assert!(is_sti(&g, &p));
    }
}

#[test]
fn enumerate_above_cap_suggests_streaming() {
    let out = sti(&["enumerate", "--n", "13"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("stream"));
}

#[test]
fn enumerate_rejects_even_order() {
    let out = sti(&["enumerate", "--n", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_stream_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("n7.g6");
    let census = sti(&["enumerate", "--n", "7", "--format", "graph6"]);
    let mut lines = stdout(&census);
    lines.push_str("Bg\n"); // order 3, skipped by the order filter
    std::fs::write(&corpus, lines).unwrap();
    let out = sti(&[
        "enumerate",
        "--n",
        "7",
        "--stream",
        corpus.to_str().unwrap(),
        "--expect",
        "3",
        "--format",
        "graph6",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
}

#[test]
fn stream_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("bad.g6");
    std::fs::write(&corpus, "Bg\n\x07junk\n").unwrap();
    let out = sti(&["enumerate", "--n", "3", "--stream", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));
}

#[test]
fn analyze_edge_list_from_stdin() {
    let g11 = hatted_cycle(11).unwrap();
    let out = sti_with_stdin(&["analyze", "-"], &g11.to_edge_list_string());
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "sti-analyze/1");
    let r = &doc["graphs"][0];
    assert_eq!(r["n"], 11);
    assert_eq!(r["m"], 12);
    assert_eq!(r["sti"], true);
    assert_eq!(r["wiener"], 152);
    assert_eq!(r["mostar"], 12);
    assert_eq!(r["diameter"], 5);
    assert_eq!(r["families"][0], "hatted-cycle(11)");
}

#[test]
fn analyze_rejects_disconnected_input() {
    let out = sti_with_stdin(&["analyze", "-"], "4\n0 1\n2 3\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("disconnected"));
}

#[test]
fn analyze_reads_graph6_lines() {
    let out = sti_with_stdin(&["analyze", "-", "--format", "text"], "Bg\nDFw\n");
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("graph6").count(), 2);
    assert!(text.contains("balanced-complete-bipartite(5)"));
}

#[test]
fn verify_internal_census_passes() {
    let out = sti(&["verify", "--census", "n5", "--expect", "1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "sti-verify/1");
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["violations"], 0);
    let discrepancies = doc["discrepancies"].as_array().unwrap();
    assert!(!discrepancies.is_empty());
    assert!(discrepancies.iter().all(|d| d["known"] == true));
}

#[test]
fn verify_census_count_mismatch_exits_two() {
    let out = sti(&["verify", "--census", "n5", "--expect", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reads_census_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("census");
    let gen = sti(&[
        "enumerate",
        "--n",
        "5",
        "--out",
        out_dir.to_str().unwrap(),
        "--format",
        "graph6",
    ]);
    assert!(gen.status.success());
    let g6 = out_dir.join("sti-n5.g6");
    let out = sti(&["verify", "--census", g6.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["orders"][0]["n"], 5);
    assert_eq!(doc["orders"][0]["census_size"], 1);
}

#[test]
fn thread_flag_and_env_are_accepted() {
    let out = sti(&["enumerate", "--n", "5", "--threads", "2", "--format", "graph6"]);
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_sti"))
        .args(["enumerate", "--n", "5", "--format", "graph6"])
        .env("STI_THREADS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let zero = sti(&["enumerate", "--n", "5", "--threads", "0"]);
    assert_eq!(zero.status.code(), Some(1));
}
