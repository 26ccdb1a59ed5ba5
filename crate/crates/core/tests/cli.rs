use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burchnall"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn verify_matches_golden_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--identities",
        "hermite-expansion,charlier-toda-eta1",
        "--max-n",
        "2",
        "--max-m",
        "2",
        "--trials",
        "2",
        "--seed",
        "7",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/verify_seed7.json");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden);
}

#[test]
fn report_has_no_floats() {
    let out = run(&[
        "verify",
        "--families",
        "meixner-pollaczek",
        "--max-n",
        "2",
        "--max-m",
        "1",
        "--seed",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    fn walk(v: &serde_json::Value) {
        match v {
            serde_json::Value::Number(n) => assert!(n.is_u64(), "non-integer number {n}"),
            serde_json::Value::Array(a) => a.iter().for_each(walk),
            serde_json::Value::Object(o) => o.values().for_each(walk),
            _ => {}
        }
    }
    walk(&v);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["verify", "--identities", "no-such-identity"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--families", "hahn"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--bogus-flag"]).status.code(), Some(2));
    // an inadmissible explicit parameter is a per-case error
    let out = run(&[
        "verify",
        "--identities",
        "laguerre-expansion",
        "--param",
        "nu=-3",
        "--max-n",
        "1",
        "--max-m",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["totals"]["errors"], 4);
}

#[test]
fn expand_prints_terms_and_residual() {
    let out = run(&["expand", "hermite-expansion", "-n", "1", "-m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("k=1: -2"));
    assert!(text.trim_end().ends_with("residual: 0"));

    let out = run(&[
        "expand",
        "aw-expansion",
        "--param",
        "a=1/2",
        "--param",
        "b=1/3",
        "--param",
        "c=-1/4",
        "--param",
        "d=1/5",
        "--param",
        "p=1/2",
        "-n",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "expand",
        "meixner-toda-etaS",
        "--param",
        "beta=2",
        "--param",
        "c=1/2",
        "-n",
        "3",
        "--scalar",
        "3/2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["residual"], "0");

    assert_eq!(run(&["expand", "laguerre-expansion", "-n", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["expand", "hermite-expansion", "--family", "laguerre"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn toda_and_list() {
    let out = run(&["toda", "charlier", "--param", "a=2", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
    let out = run(&["list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for id in [
        "toda-prop71",
        "bigqjacobi-expansion-I",
        "cqhermite-expansion",
        "mp-toda",
    ] {
        assert!(text.contains(id), "{id} missing from list");
    }
}
