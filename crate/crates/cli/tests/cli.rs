use std::io::Write;
use std::process::{Command, Output, Stdio};

use pmcg::dsl::Command as Cmd;
use pmcg::{parse, print, Program};
use planar_mcg::filling::filling_family;
use serde_json::Value;

const BASE: &str = "surface(3) tw{1,2} tw{1,2|s2^-1}";

fn pmcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmcg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn mult_on_base_case() {
    let doc = json(&pmcg(&["-e", &format!("{BASE} mult")]));
    assert_eq!(doc["results"], serde_json::json!({"M": [2, 2, 0], "J": {"1,2": 2}}));
    for key in ["command", "surface", "inputs", "results", "bounds_used", "timing"] {
        assert!(doc.get(key).is_some(), "{key}");
    }
}

#[test]
fn stretch_on_base_case() {
    let doc = json(&pmcg(&["-e", &format!("{BASE} stretch"), "--iters", "20"]));
    let r = doc["results"]["growth_rate"].as_f64().unwrap();
    assert!((r - 13.9282).abs() / 13.9282 < 0.01, "{r}");
    assert_eq!(doc["results"]["z"], 4);
}

#[test]
fn enumerate_boundary_twists() {
    let doc = json(&pmcg(&["-e", "surface(2) tw{1} tw{2} enumerate", "--bound", "0"]));
    assert_eq!(doc["results"]["class_count"], 1);
}

#[test]
fn exit_codes() {
    let out = pmcg(&["-e", "surface(3) tw{1,4} product"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column 17"));

    let out = pmcg(&["-e", "surface(3) tw{1,2} hurwitz(1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());

    let fig6 = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/family_3211.pmcg")).unwrap();
    let src = fig6.replace("verify-unique", "enumerate");
    let out = pmcg(&["-e", &src, "--ceiling", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pmcg"))
        .args(["-", "--format", "tsv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(format!("{BASE} invariants").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "results.euler\t0"), "{text}");
    assert!(text.lines().any(|l| l == "results.h1_rank\t2"), "{text}");
}

#[test]
fn threads_do_not_change_output() {
    let src = format!("{BASE} enumerate");
    let one = pmcg(&["-e", &src, "--bound", "3", "--dedupe-bound", "3", "--threads", "1"]);
    let eight = pmcg(&["-e", &src, "--bound", "3", "--dedupe-bound", "3", "--threads", "8"]);
    assert!(one.status.success() && eight.status.success());
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn family_program_golden_round_trip() {
    let golden = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/family_3211.pmcg")).unwrap();
    let f = filling_family(3, 2, 1, 1, &[1, 1, 1, 0, 1]).unwrap();
    let program = Program::from_factorization(&f, Cmd::VerifyUnique);
    assert_eq!(print(&program), golden);
    let parsed = parse(&golden).unwrap();
    assert_eq!(parsed, program);
    assert_eq!(print(&parsed), golden);
    assert_eq!(parsed.factorization().unwrap(), f);
}

#[test]
fn family_command_reports_profile() {
    let doc = json(&pmcg(&["-e", "surface(5) family(3,2,1,1; 1,1,1,0,1)"]));
    assert_eq!(doc["results"]["expected_multiset_found"], true);
    assert_eq!(doc["results"]["profile"]["M"], serde_json::json!([2, 3, 2, 2, 1]));
    let wrong = pmcg(&["-e", "surface(4) family(3,2,1,1)"]);
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn relations_check_runs_lantern() {
    let doc = json(&pmcg(&["-e", "surface(3) tw{1} tw{2} tw{3} relations-check", "--bound", "2"]));
    assert_eq!(doc["results"]["lantern"]["holds"], true);
    assert_eq!(doc["results"]["commutation_consistent"], true);
}
