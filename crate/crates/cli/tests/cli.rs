use std::process::{Command, Output};

use serde_json::Value;

fn cosetlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosetlab"))
        .args(args)
        .env_remove("COSETLAB_CAP_ORDER")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cosetlab(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn analyze_reports_subgroups() {
    let v = json(&["analyze", "--preset", "S3", "--json"]);
    assert_eq!(v["order"], 6);
    assert_eq!(v["subgroups"], 6);
    assert_eq!(v["monoid_size"], 18);
    assert_eq!(v["central_idempotents"], 3);
    assert_eq!(v["dictionary"]["defects"]["status"], "pass");
}

#[test]
fn group_spec_text_is_accepted() {
    let v = json(&["analyze", "--group", "perm degree=3 gens=(1 2);(1 2 3)", "--json"]);
    assert_eq!(v["order"], 6);
}

#[test]
fn parse_errors_exit_nonzero_with_position() {
    let out = cosetlab(&["analyze", "--group", "perm degree=3 gens=(1 2", "--json"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn coset_monoid_writes_table_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("k.imonoid");
    let out = cosetlab(&["coset-monoid", "--preset", "C2", "--out", table.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&table).unwrap();
    assert!(text.starts_with("imonoid 3 identity=0 zero=2"));
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("k.imonoid.json")).unwrap()).unwrap();
    assert_eq!(side["schema"], 1);
    assert_eq!(side["elements"].as_array().unwrap().len(), 3);

    // the table round-trips through the generic monoid path
    let v = json(&["classify", "--monoid", table.to_str().unwrap(), "--json"]);
    assert_eq!(v["g_nilpotent_length"], 1);
}

#[test]
fn series_composition_of_c6() {
    let v = json(&["series", "--preset", "C6", "--kind", "central", "--json"]);
    let list = v["composition_series"].as_array().unwrap();
    assert_eq!(list.len(), 2);
    for x in list {
        assert_eq!(x["length"], 2);
        assert!(x["matching_with_first"].is_array());
    }
}

#[test]
fn classify_spot_values() {
    let v = json(&["classify", "--preset", "S3", "--json"]);
    assert_eq!(v["g_nilpotent_length"], Value::Null);
    assert_eq!(v["g_solvable_length"], 2);
}

#[test]
fn verify_is_byte_identical_and_passes() {
    let a = cosetlab(&["verify", "--json"]);
    let b = cosetlab(&["verify", "--json"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rows"].as_array().unwrap().len(), 23);
}

#[test]
fn verify_corpus_dir_keeps_going_past_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a_bad.group"), "table 2\n0 1\n1 1\n").unwrap();
    std::fs::write(dir.path().join("b_good.group"), "preset V4\n").unwrap();
    let out = cosetlab(&["verify", "--json", "--corpus", dir.path().to_str().unwrap()]);
    assert!(!out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["rows"][0]["error"].is_string());
    assert_eq!(v["rows"][1]["group"], "b_good");
    assert!(v["rows"][1].get("error").is_none());
}

#[test]
fn probe_rejects_infinite_problems() {
    let out = cosetlab(&["probe", "--problem", "5"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not finitely probeable"));
}

#[test]
fn probe_4a_over_corpus() {
    let v = json(&["probe", "--problem", "4a"]);
    assert_eq!(v["groups"], 23);
    assert!(v["empirical_max"].is_number());
}

#[test]
fn dot_outputs() {
    let out = cosetlab(&["dot", "--preset", "C1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("label=").count(), 1);
    let out = cosetlab(&["dot", "--preset", "S3", "--target", "idempotent-order"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("label=").count(), 6);
}

#[test]
fn max_order_above_hard_cap_is_refused() {
    let out = cosetlab(&["analyze", "--preset", "C2", "--max-order", "1000"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("COSETLAB_CAP_ORDER"));
}

#[test]
fn env_var_raises_the_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_cosetlab"))
        .args(["analyze", "--preset", "C70", "--json"])
        .env("COSETLAB_CAP_ORDER", "80")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = cosetlab(&["analyze", "--preset", "C70"]);
    assert!(!out.status.success());
}
