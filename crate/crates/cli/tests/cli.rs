//! End-to-end tests driving the `fibsum` binary: exit codes, output
//! formats, round trips, and the claim suite front end.

use std::path::Path;
use std::process::{Command, Output};

fn fibsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibsum"))
        .args(args)
        .env_remove("FIBSUM_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn generate_dot_matches_published_totals() {
    let out = fibsum(&[
        "generate",
        "fib_sum_set",
        "3",
        "--semantics",
        "inclusive",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let dot = stdout_of(&out);
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    assert_eq!(nodes, 7);
    let edge_lines: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
    let loops = edge_lines
        .iter()
        .filter(|l| {
            let lhs = l.trim().split(" -- ").next().unwrap();
            l.trim()
                .split(" -- ")
                .nth(1)
                .unwrap()
                .starts_with(&format!("{lhs} "))
        })
        .count();
    assert_eq!(edge_lines.len(), 38, "34 edges plus 4 self-loops");
    assert_eq!(loops, 4);
    assert!(dot.contains("semantics=inclusive"));
}

#[test]
fn generate_single_vertex_document() {
    let out = fibsum(&["generate", "fib_sum", "1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 0);
    assert_eq!(doc["format_version"], 1);
}

#[test]
fn generate_strict_n2_counts() {
    let out = fibsum(&[
        "generate",
        "fib_sum_set",
        "2",
        "--semantics",
        "strict",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 3);
    assert_eq!(doc["loops"].as_array().unwrap().len(), 1);
    assert_eq!(doc["semantics"], "strict");
}

#[test]
fn json_round_trip_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.json");
    for sem in ["strict", "inclusive"] {
        let out = fibsum(&[
            "generate",
            "fib_sum_set",
            "4",
            "--semantics",
            sem,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());

        let direct = fibsum(&[
            "analyze",
            "fib_sum_set",
            "4",
            "--semantics",
            sem,
            "--invariant",
            "degrees",
        ]);
        let loaded = fibsum(&[
            "analyze",
            "--input",
            path.to_str().unwrap(),
            "--invariant",
            "degrees",
        ]);
        assert!(direct.status.success() && loaded.status.success());
        let value_of = |o: &Output| {
            stdout_of(o)
                .lines()
                .find(|l| l.starts_with("degrees"))
                .unwrap()
                .to_string()
        };
        assert_eq!(value_of(&direct), value_of(&loaded), "{sem}");
    }
}

#[test]
fn analyze_solver_invariants() {
    let chromatic = fibsum(&[
        "analyze",
        "fib_sum_set",
        "3",
        "--semantics",
        "strict",
        "--invariant",
        "chromatic",
    ]);
    assert!(chromatic.status.success());
    assert!(stdout_of(&chromatic).contains("chromatic = 5"));

    let eared = fibsum(&[
        "analyze",
        "fib_sum_set",
        "3",
        "--semantics",
        "inclusive",
        "--invariant",
        "eared_clique",
    ]);
    assert!(stdout_of(&eared).contains("eared_clique = 6"));

    let bipartite = fibsum(&["analyze", "fib_sum", "3", "--invariant", "bipartite"]);
    assert!(stdout_of(&bipartite).contains("bipartite = true"));
}

#[test]
fn analyze_unknown_invariant_is_a_usage_error() {
    let out = fibsum(&["analyze", "fib_sum", "3", "--invariant", "girth"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exhausted_budget_exits_three() {
    let out = fibsum(&[
        "analyze",
        "fib_sum_set",
        "4",
        "--invariant",
        "hamiltonian",
        "--budget",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).contains("unknown"));
}

#[test]
fn cap_is_enforced_and_env_overridable() {
    let over = fibsum(&["generate", "fib_sum_set", "8"]);
    assert_eq!(over.status.code(), Some(2));

    let raised = Command::new(env!("CARGO_BIN_EXE_fibsum"))
        .args(["generate", "fib_sum_set", "8", "--format", "edges"])
        .env("FIBSUM_MAX_N", "9")
        .output()
        .unwrap();
    assert!(raised.status.success());

    let hard_limit = Command::new(env!("CARGO_BIN_EXE_fibsum"))
        .args(["generate", "fib_sum_set", "8"])
        .env("FIBSUM_MAX_N", "40")
        .output()
        .unwrap();
    assert_eq!(hard_limit.status.code(), Some(1));
}

#[test]
fn bad_flags_exit_one() {
    assert_eq!(fibsum(&["generate"]).status.code(), Some(1));
    assert_eq!(
        fibsum(&["generate", "no_such_family", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        fibsum(&["generate", "fib_sum", "3", "--format", "png"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        fibsum(&["verify", "--n-from", "4", "--n-to", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn set_graph_of_graph_needs_a_simple_host() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.json");
    let multi = dir.path().join("multi.json");

    assert!(
        fibsum(&["generate", "fib_sum", "2", "--out", host.to_str().unwrap()])
            .status
            .success()
    );
    assert!(fibsum(&[
        "generate",
        "fib_sum_set",
        "3",
        "--out",
        multi.to_str().unwrap()
    ])
    .status
    .success());

    let out = fibsum(&[
        "generate",
        "set_graph_of_graph",
        "--host",
        host.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    // Host P_2 yields vertices {1}, {2}, {1,2} with three single edges and
    // one loop at the full set.
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 3);
    assert_eq!(doc["loops"][0]["v"], 2);
    assert_eq!(doc["host"], "fib_sum(n=2)");

    let rejected = fibsum(&[
        "generate",
        "set_graph_of_graph",
        "--host",
        multi.to_str().unwrap(),
    ]);
    assert_eq!(rejected.status.code(), Some(1));

    let missing = fibsum(&["generate", "set_graph_of_graph", "--host", "no-such.json"]);
    assert_eq!(missing.status.code(), Some(4));
}

#[test]
fn verify_range_passes_and_reports_expected_splits() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.jsonl");
    let out = fibsum(&[
        "verify",
        "--n-from",
        "1",
        "--n-to",
        "5",
        "--semantics",
        "both",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let table = stdout_of(&out);
    assert!(table.contains("THM_2_7"));
    assert!(table.contains("[observational]"));
    assert!(table.contains("0 deviation(s)"));

    let report_text = std::fs::read_to_string(&report).unwrap();
    let mut saw_parity_fail = false;
    let mut saw_size_bound_finding = false;
    for line in report_text.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        if record["claim"] == "THM_2_7"
            && record["semantics"] == "inclusive"
            && record["n"].as_u64().unwrap() >= 2
        {
            assert_eq!(record["status"], "fail");
            saw_parity_fail = true;
        }
        if record["claim"] == "PROP_2_9" && record["n"].as_u64().unwrap() >= 4 {
            assert_eq!(record["status"], "fail");
            saw_size_bound_finding = true;
        }
    }
    assert!(saw_parity_fail && saw_size_bound_finding);
}

#[test]
fn verify_single_point_inclusive_golden() {
    let out = fibsum(&[
        "verify",
        "--n-from",
        "3",
        "--n-to",
        "3",
        "--semantics",
        "inclusive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout_of(&out);
    let golden = table
        .lines()
        .find(|l| l.starts_with("FIG_2_GOLDEN"))
        .unwrap();
    assert!(golden.contains("pass"));
}

#[test]
fn verify_n1_trivially_clean() {
    let out = fibsum(&["verify", "--n-from", "1", "--n-to", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout_of(&out);
    assert!(!table.contains(" fail "));
}

#[test]
fn report_io_failure_exits_four() {
    let out = fibsum(&[
        "verify",
        "--n-from",
        "1",
        "--n-to",
        "1",
        "--report",
        "/nonexistent-dir/report.jsonl",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn dot_render_cap_keeps_true_multiplicity() {
    // Lucas sums make {1,3} loop-bearing; mainly this pins the DOT grammar.
    let out = fibsum(&[
        "generate",
        "fib_sum_set",
        "6",
        "--semantics",
        "inclusive",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let dot = stdout_of(&out);
    assert!(dot.starts_with("graph "));
    assert!(dot.trim_end().ends_with('}'));
    // Every drawn line carries the true multiplicity even when capped.
    for line in dot.lines().filter(|l| l.contains(" -- ")) {
        assert!(line.contains("[multiplicity="), "{line}");
    }
}

#[test]
fn lucas_sequence_flag_changes_the_graph() {
    let fib = fibsum(&["analyze", "fib_sum_set", "3", "--invariant", "loops"]);
    let lucas = fibsum(&[
        "analyze",
        "fib_sum_set",
        "3",
        "--sequence",
        "lucas",
        "--invariant",
        "loops",
    ]);
    assert!(fib.status.success() && lucas.status.success());
    assert!(stdout_of(&fib).contains("loops = [0, 0, 0, 1, 0, 1, 2]"));
    // Lucas sums: 1+3 = 4 gains a loop at {1,3}, 2+3 = 5 loses the one at {2,3}.
    assert!(stdout_of(&lucas).contains("loops = [0, 0, 0, 1, 1, 0, 2]"));
}

#[test]
fn help_exits_zero() {
    let out = fibsum(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("generate"));
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.dot");
    let out = fibsum(&[
        "generate",
        "set_graph",
        "3",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(Path::new(&path)).unwrap();
    // The intersecting-subsets graph on 3 elements has 15 edges.
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 15);
}
