use std::process::{Command, Output};

use serde_json::Value;

fn gggr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gggr"))
        .args(args)
        .env("GGGR_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_gl3() {
    let out = gggr(&["verify", "--n", "3", "--eps", "+1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["eps"], 1);
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    for r in results {
        assert_eq!(r["pass"], true);
        assert_eq!(r["monic"], true);
        assert_eq!(r["degree"], r["target_degree"]);
    }
    assert_eq!(results[2]["mu"], serde_json::json!([1, 1, 1]));
    assert_eq!(results[2]["degree"], 9);
}

#[test]
fn exit_code_tracks_pass_flag() {
    for eps in ["+1", "-1"] {
        let out = gggr(&["verify", "--n", "2", "--eps", eps]);
        let pass = json(&out)["pass"].as_bool().unwrap();
        assert_eq!(out.status.code(), Some(if pass { 0 } else { 1 }));
    }
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--n", "0"][..],
        &["verify", "--n", "2", "--eps", "2"],
        &["oracle", "--n", "2", "--q", "6"],
        &["gggr", "--n", "3", "--mu", "2,2"],
        &["endo", "--n", "2", "--q-samples", "10"],
        &["nonsense"],
    ] {
        let out = gggr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn caps() {
    assert_eq!(
        gggr(&["verify", "--n", "5", "--eps", "-1"]).status.code(),
        Some(3)
    );
    assert_eq!(gggr(&["verify", "--n", "6"]).status.code(), Some(3));
    assert_eq!(gggr(&["green", "--n", "7"]).status.code(), Some(3));
    assert_eq!(
        gggr(&["oracle", "--n", "4", "--q", "9"]).status.code(),
        Some(3)
    );
}

#[test]
fn oracle_gl2_f3() {
    let out = gggr(&["oracle", "--n", "2", "--q", "3", "--eps", "+1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["gelfand_graev_inner"], "6");
    assert_eq!(report["regular_rep_inner"], "48");
    assert_eq!(report["group_order"], 48);
    assert_eq!(report["pass"], true);
}

#[test]
fn deterministic_output() {
    for args in [
        &["green", "--n", "4", "--eps", "-1"][..],
        &["endo", "--n", "4"],
        &["verify", "--n", "4", "--eps", "-1"],
        &["gggr", "--n", "4", "--mu", "2,1,1", "--format", "csv"],
    ] {
        let a = gggr(args);
        let b = gggr(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn green_json_shape() {
    let out = gggr(&["green", "--n", "2", "--eps", "-1"]);
    let table = json(&out);
    assert_eq!(table["n"], 2);
    assert_eq!(table["eps"], -1);
    let rows = table["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["rho"], serde_json::json!([2]));
    assert_eq!(rows[0]["cols"].as_array().unwrap().len(), 2);
    assert_eq!(rows[0]["cols"][0]["poly"]["var"], "q");
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("gggr-endo-{}.json", std::process::id()));
    let out = gggr(&["endo", "--n", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written["results"][0]["samples"]["3"], "6");
}
