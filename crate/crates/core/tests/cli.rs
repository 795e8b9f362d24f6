use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rexlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rexlab"))
        .args(args)
        .env_remove("REXLAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_brown() {
    let out = rexlab(&["construct", "brown", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verification"]["n"], 27);
    assert_eq!(v["verification"]["regular_degree"], 6);
    assert_eq!(v["verification"]["freeness"]["3,3"], true);
}

#[test]
fn construct_h_star_and_norm() {
    let v = json(&rexlab(&["construct", "h-star", "--p", "5", "--t", "2"]));
    assert_eq!(v["verification"]["n"], 11);
    assert_eq!(v["verification"]["regular_degree"], 4);

    let out = rexlab(&["construct", "norm", "--p", "3", "--s", "3", "--loops"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verification"]["regular_degree"], 13);
    assert_eq!(v["verification"]["loop_count"], 13);
}

#[test]
fn construct_every_family() {
    let cases: &[&[&str]] = &[
        &["construct", "bipartite-c4", "--p", "3", "--m", "30"],
        &["construct", "bipartite-k2t", "--p", "7", "--t", "2", "--m", "50"],
        &["construct", "h", "--p", "7", "--t", "3"],
        &["construct", "er-parsons", "--q", "7", "--part", "r2"],
        &["construct", "cayley-sum", "--orders", "4,6", "--elements", "1,5,7", "--loops", "--spectra"],
    ];
    for args in cases {
        let out = rexlab(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn pipelines() {
    let out = rexlab(&["pipeline", "k33", "--n", "179"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verification"]["edge_count"], 537);
    assert_eq!(v["verification"]["regular_degree"], 6);
    let target = v["verification"]["bound_comparison"]["target_degree"].as_f64().unwrap();
    assert!((target - (179f64 / 13.0).powf(2.0 / 3.0)).abs() < 1e-9);

    let v = json(&rexlab(&["pipeline", "kst", "--n", "81", "--s", "3", "--t", "7"]));
    assert_eq!(v["verification"]["edge_count"], 486);
    assert!(v["construction_log"].as_array().unwrap().iter().any(|s| s["step"] == "cross_matching"));
}

#[test]
fn infeasible_pipeline_exits_4_with_constraints() {
    let out = rexlab(&["pipeline", "c4", "--n", "5"]);
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_eq!(v["infeasibility"]["pipeline"], "c4");
    assert!(!v["infeasibility"]["constraints"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(rexlab(&["construct", "brown"]).status.code(), Some(2));
    assert_eq!(rexlab(&["construct", "nonsense"]).status.code(), Some(2));
    assert_eq!(rexlab(&["construct", "brown", "--p", "4"]).status.code(), Some(2));
    assert_eq!(rexlab(&["pipeline", "k2t", "--n", "101", "--t", "3"]).status.code(), Some(2));
}

#[test]
fn verify_hand_written_files() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", "n 5 loops 0\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    let v = json(&rexlab(&["verify", &c5, "--free", "2", "2"]));
    assert_eq!(v["verification"]["freeness"]["2,2"], true);

    let k4 = write(dir.path(), "k4.txt", "n 4 loops 0\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let v = json(&rexlab(&["verify", &k4, "--free", "2", "2", "--spectra"]));
    assert_eq!(v["verification"]["freeness"]["2,2"], false);
    assert_eq!(v["verification"]["spectral"]["top_adjacency"], 3.0);

    let bad = write(dir.path(), "bad.txt", "n 3 loops 0\n0 7\n");
    assert_eq!(rexlab(&["verify", &bad]).status.code(), Some(2));
    assert_eq!(rexlab(&["verify", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn verify_pipeline_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kst.txt");
    let p = path.to_str().unwrap();
    assert_eq!(rexlab(&["pipeline", "kst", "--n", "81", "--s", "3", "--t", "7", "--out", p]).status.code(), Some(0));
    let v = json(&rexlab(&["verify", p, "--free", "3", "7"]));
    assert_eq!(v["verification"]["freeness"]["3,7"], true);
    assert!(v["verification"]["max_codegree"]["3"].as_u64().unwrap() <= 6);
}

// construct -> write -> read -> verify gives the same verification fields
#[test]
fn round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (family, extra, s, t) in [
        ("brown", vec!["--p", "3"], "3", "3"),
        ("norm", vec!["--p", "3", "--s", "3", "--loops"], "3", "7"),
        ("h-star", vec!["--p", "13", "--t", "2"], "2", "5"),
    ] {
        let graph = dir.path().join(format!("{family}.txt"));
        let g = graph.to_str().unwrap();
        let mut args = vec!["construct", family];
        args.extend(&extra);
        args.extend(["--out", g, "--spectra"]);
        let built = json(&rexlab(&args));
        let read = json(&rexlab(&["verify", g, "--free", s, t, "--spectra"]));
        assert_eq!(built["verification"], read["verification"], "{family}");

        let again = dir.path().join(format!("{family}-2.txt"));
        args.pop();
        args.pop();
        args.pop();
        args.extend(["--out", again.to_str().unwrap()]);
        rexlab(&args);
        assert_eq!(std::fs::read(&graph).unwrap(), std::fs::read(&again).unwrap());
    }
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_rexlab"))
        .args(["pipeline", "kst", "--n", "81", "--s", "3", "--t", "7"])
        .env("REXLAB_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}
