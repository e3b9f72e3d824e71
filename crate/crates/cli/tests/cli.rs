//! End-to-end runs of the `matchlift` binary: report shapes, exit codes,
//! and byte-level determinism.

use std::process::{Command, Output};

fn matchlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchlift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_instance(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("matchlift-test-{name}-{}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";

#[test]
fn oracle_reports_the_c5_index() {
    let path = write_instance("c5", C5);
    let out = matchlift(&["oracle", &path]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["strong_chromatic_index"], 5);
}

#[test]
fn oracle_exhaustion_exits_three() {
    // C5's conflict graph is a clique and needs no search nodes at all, so
    // use C6, whose budget-3 search must branch.
    let path = write_instance("c6x", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let out = matchlift(&["oracle", "--node-limit", "1", &path]);
    assert_eq!(out.status.code(), Some(3));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["outcome"], "exhausted");

    let out = matchlift(&[
        "strong-color",
        "--method",
        "exact",
        "--node-limit",
        "1",
        &path,
    ]);
    assert_eq!(out.status.code(), Some(3));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["outcome"], "exhausted");
}

#[test]
fn strong_color_oneplanar_on_k6() {
    let path = write_instance(
        "k6",
        "6 15\n0 1\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n",
    );
    let out = matchlift(&["strong-color", "--method", "oneplanar", &path]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["valid"], true);
    assert_eq!(value["method"], "oneplanar");
    assert!(value["color_count"].as_u64().unwrap() <= 70);
    assert_eq!(value["certified_bound"]["value"], "70");
}

#[test]
fn verify_accepts_good_and_rejects_tampered_colorings() {
    let instance = write_instance("c5v", C5);
    let coloring = write_instance("c5col", "");
    let out = matchlift(&[
        "strong-color",
        "--method",
        "greedy",
        "--output",
        &coloring,
        &instance,
    ]);
    assert!(out.status.success());
    let ok = matchlift(&["verify", "--coloring", &coloring, &instance]);
    assert!(ok.status.success());

    // Give two adjacent edges the same color.
    std::fs::write(&coloring, "0 0\n1 0\n2 1\n3 2\n4 3\n").unwrap();
    let bad = matchlift(&["verify", "--coloring", &coloring, &instance]);
    assert_eq!(bad.status.code(), Some(2));
    let value: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(value["valid"], false);
    assert!(!value["violations"].as_array().unwrap().is_empty());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = matchlift(&["gen", "--family", "ic-planar", "--k", "5", "--pairs", "2", "--seed", "42"]);
    let b = matchlift(&["gen", "--family", "ic-planar", "--k", "5", "--pairs", "2", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let path = write_instance("ic", &String::from_utf8(a.stdout).unwrap());
    let run = |_: usize| {
        matchlift(&[
            "strong-color",
            "--method",
            "ic",
            "--seed",
            "9",
            &path,
        ])
    };
    let first = run(0);
    let second = run(1);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let bench_a = matchlift(&["bench", "--seed", "5"]);
    let bench_b = matchlift(&["bench", "--seed", "5"]);
    assert!(bench_a.status.success(), "{}", String::from_utf8_lossy(&bench_a.stderr));
    assert_eq!(bench_a.stdout, bench_b.stdout);
}

#[test]
fn invalid_input_exits_one_and_usage_exits_sixty_four() {
    let path = write_instance("loop", "2 1\n1 1\n");
    let out = matchlift(&["mad", &path]);
    assert_eq!(out.status.code(), Some(1));

    let out = matchlift(&["mad", "/nonexistent/file"]);
    assert_eq!(out.status.code(), Some(1));

    let out = matchlift(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));

    let out = matchlift(&["gen", "--family", "h-delta"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn sparsity_subcommand_defaults_min_vertices() {
    let path = write_instance(
        "quad",
        &String::from_utf8(
            matchlift(&["gen", "--family", "quad-optimal", "--base", "cube"]).stdout,
        )
        .unwrap(),
    );
    let out = matchlift(&["sparsity", "--a", "4", "--b", "8", &path]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["holds"], true);
    assert_eq!(value["min_vertices"], 3);

    // The whole graph meets the bound with equality: 24 = 4*8 - 8.
    let mad = matchlift(&["mad", &path]);
    let value: serde_json::Value = serde_json::from_slice(&mad.stdout).unwrap();
    assert_eq!(value["mad"], "6");
}

#[test]
fn edge_color_subcommand_targets() {
    let path = write_instance("pet", "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n5 7\n7 9\n9 6\n6 8\n8 5\n0 5\n1 6\n2 7\n3 8\n4 9\n");
    let out = matchlift(&["edge-color", &path]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["outcome"], "found");
    assert!(value["color_count"].as_u64().unwrap() <= 4);

    let out = matchlift(&["edge-color", "--target", "3", &path]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["outcome"], "impossible");
}
