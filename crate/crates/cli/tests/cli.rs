use std::process::{Command, Output};

fn mckayq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckayq")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--json", "-"]);
    let out = mckayq(&a);
    (serde_json::from_slice(&out.stdout).expect("report is JSON"), out.status.code().unwrap())
}

#[test]
fn type_cl_n2() {
    let (r, code) = json(&["analyze", "catalog:typeCL-n2"]);
    assert_eq!(code, 0);
    assert_eq!(r["dynkin_type"], "CLn~(2)");
    assert_eq!(r["class_group"]["invariant_factors"], serde_json::json!([]));
    assert_eq!(r["flags"]["gorenstein"], true);
}

#[test]
fn nongor() {
    let (r, code) = json(&["analyze", "catalog:nongor"]);
    assert_eq!(code, 0);
    assert_eq!(r["flags"]["gorenstein"], false);
    assert_eq!(r["class_group"]["invariant_factors"], serde_json::json!([2]));
    assert_eq!(r["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn d3_nonisolated_n2() {
    let (r, code) = json(&["analyze", "catalog:d3-nonisolated-n2"]);
    assert_eq!(code, 0);
    assert_eq!(r["flags"]["isolated"], false);
    let named: Vec<&str> = r["sequences"].as_array().unwrap().iter().map(|s| s["named"].as_str().unwrap()).collect();
    assert_eq!(named.len(), 3);
    assert!(named.iter().any(|s| s.starts_with("0 -> M_2 -> ")), "{named:?}");
}

#[test]
fn json_is_stable() {
    let a = mckayq(&["analyze", "catalog:typeG22", "--json", "-"]).stdout;
    let b = mckayq(&["analyze", "catalog:typeG22", "--json", "-"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn dot_output() {
    let out = mckayq(&["analyze", "catalog:typeC-n2", "--dot", "-"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph mckay {"));
    assert!(!dot.contains("dashed"));
    let out = mckayq(&["analyze", "catalog:typeC-n2", "--dot", "-", "--show-nu"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("dashed"));
}

#[test]
fn catalog_show_and_list() {
    let out = mckayq(&["catalog", "show", "typeG22"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("gamma = "));
    assert!(text.contains("\"kind\": \"finite\""));
    let list = String::from_utf8(mckayq(&["catalog", "list"]).stdout).unwrap();
    for name in ["typeCL-n1", "typeC-n2", "typeBC-n1", "typeG22", "nongor", "d3-isolated-n2", "ade-A1", "ade-D4", "ade-E8"] {
        assert!(list.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn unknown_entry() {
    let out = mckayq(&["catalog", "show", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown catalog entry nosuch"));
    assert_eq!(mckayq(&["analyze", "catalog:nosuch"]).status.code(), Some(2));
}

fn job_file(name: &str, text: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("mckayq-{}-{name}.json", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn exit_codes() {
    let cases = [
        ("refl", r#"{"field": {"kind": "cyclotomic", "n": 1}, "group": {"d": 2, "generators": [{"matrix": [["-1","0"],["0","1"]]}]}}"#, 3),
        (
            "surj",
            r#"{"field": {"kind": "cyclotomic", "n": 3, "galois": [-1]}, "group": {"d": 2, "generators": [{"matrix": [["z","0"],["0","z^2"]]}]}}"#,
            4,
        ),
        ("split", r#"{"field": {"kind": "cyclotomic", "n": 1}, "group": {"d": 2, "generators": [{"matrix": [["0","-1"],["1","0"]]}]}}"#, 5),
        ("syntax", r#"{"field": 3}"#, 2),
    ];
    for (name, text, code) in cases {
        let p = job_file(name, text);
        let out = mckayq(&["analyze", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(code), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        std::fs::remove_file(p).unwrap();
    }
    assert_eq!(mckayq(&["analyze", "catalog:ade-E8", "--cap", "50"]).status.code(), Some(6));
}

#[test]
fn ambiguous_still_reports() {
    let (r, code) = json(&["analyze", "catalog:typeC-n2", "--saturation", "0", "--norm-search-bound", "0"]);
    assert_eq!(code, 7);
    assert_eq!(r["ambiguous"], serde_json::json!([2]));
    assert!(r["orbits"][2]["candidates"].as_array().unwrap().len() > 1);
}

#[test]
fn selftest_subsets() {
    let out = mckayq(&["selftest", "--only", "typeBC"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("4 passed, 0 failed"));
    let out = mckayq(&["selftest", "--only", "nosuch"]);
    assert!(out.status.success());
}
