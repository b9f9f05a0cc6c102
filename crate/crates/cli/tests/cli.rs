// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

fn qdi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_writes_canonical_netlist_and_census() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.net");
    let o = qdi(&["gen", "--arch", "scbcla", "--width", "32", "--section", "4", "--alias", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let summary = stdout(&o);
    assert!(summary.contains("ALIAS: 16"), "{summary}");
    assert!(summary.contains("transistors"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("module scbcla32_m4_alias\n"));
    let n = qdi_core::netlist::parse_netlist(&text).unwrap();
    assert_eq!(n.probes.iter().filter(|p| p.label.ends_with(".N")).count(), 8);

    let hybrid = qdi(&["gen", "--arch", "scbcla", "--width", "32", "--section", "4", "--alias", "--hybrid-rca", "4"]);
    assert!(stdout(&hybrid).starts_with("module scbcla32_m4_alias_rca4\n"));
}

#[test]
fn gen_rejects_indivisible_width() {
    let o = qdi(&["gen", "--arch", "scbcla", "--width", "30", "--section", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not divide"));
}

#[test]
fn verify_block_exhaustive() {
    let o = qdi(&["verify", "--arch", "scbclg", "--alias", "--exhaustive"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("oracle") && l.contains("512") && l.contains("PASS")));
    assert!(out.lines().any(|l| l.starts_with("alias equivalence") && l.contains("512") && l.contains("PASS")));
}

#[test]
fn verify_rca8_exhaustive() {
    let o = qdi(&["verify", "--arch", "rca", "--width", "8", "--exhaustive", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("oracle,rca8,131072,PASS"));
}

#[test]
fn fuzz_is_reproducible() {
    let args = ["verify", "--arch", "scbcla", "--width", "32", "--alias", "--fuzz", "1000", "--seed", "7"];
    let a = qdi(&args);
    let b = qdi(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("# seed: 7"));
}

#[test]
fn mutated_design_fails_verification() {
    let o = qdi(&["verify", "--arch", "rca", "--width", "4", "--mutate", "swap-rails"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = qdi(&["verify", "--arch", "scbclg", "--alias", "--mutate", "drop-c", "--fuzz", "1000"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("premature"));
}

#[test]
fn report_reproduces_claims() {
    let o = qdi(&["report", "--reference", "bundled"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("alias latency reduction 24.6% PASS"));
    assert!(out.contains("latency reduction vs RCLA 16.0% PASS"));
    assert!(!out.contains("FAIL"));
    let j = qdi(&["report", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v[0]["rows"].as_array().unwrap().len(), 11);
}

#[test]
fn bench_group4_csv() {
    let o = qdi(&["bench", "--group4", "--format", "csv", "--stress", "--random", "200"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 5, "{out}");
    assert!(out.contains("ordering hybrid-alias < alias < hybrid-plain < plain: PASS"));
}

#[test]
fn sim_with_vector_file_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let vectors = dir.path().join("v.txt");
    let trace = dir.path().join("t.csv");
    std::fs::write(&vectors, "# a,b,cin\nf,1,0\n3,4,1\n").unwrap();
    let o = qdi(&[
        "sim",
        "--arch",
        "rca",
        "--width",
        "4",
        "--vectors",
        vectors.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
        "--format",
        "csv",
        "--delay",
        "random",
        "--seed",
        "3",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("# seed: 3"));
    assert!(out.contains("0,f,1,0,0,1,true"), "{out}");
    assert!(out.contains("1,3,4,1,8,0,true"), "{out}");
    let t = std::fs::read_to_string(&trace).unwrap();
    assert!(t.starts_with("time,net,value\n"));
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "arch = rca\nwidth = 4\nexhaustive = true\nformat = csv\n").unwrap();
    let o = qdi(&["--config", cfg.to_str().unwrap(), "verify"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("oracle,rca4,512,PASS"));
    let o = qdi(&["--config", cfg.to_str().unwrap(), "verify", "--width", "2"]);
    assert!(stdout(&o).contains("oracle,rca2,32,PASS"));
    std::fs::write(&cfg, "colour = red\n").unwrap();
    assert_eq!(qdi(&["--config", cfg.to_str().unwrap(), "report"]).status.code(), Some(2));
}
