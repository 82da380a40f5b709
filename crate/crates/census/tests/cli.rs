use std::process::Command;

use serde_json::Value;

fn grrcensus(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_grrcensus")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn census_writes_one_json_object() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    let (code, _, _) =
        grrcensus(&["census", "--group", "quaternion", "--mode", "digraph", "--method", "exhaustive", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["total"], 256);
    assert_eq!(v["counts"]["drr_or_grr"], 0);
    assert_eq!(v["proportion"]["kind"], "exact");
}

#[test]
fn sampled_census_is_reproducible() {
    let args = ["census", "--group", "dihedral:5", "--method", "sample", "--samples", "2000", "--seed", "5", "--csv"];
    let strip = |s: String| s.lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect::<Vec<_>>();
    let (c1, a, _) = grrcensus(&args);
    let (c2, b, _) = grrcensus(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(strip(a.clone()), strip(b));
    assert!(a.starts_with("group,order,mode,method,total,drr_or_grr,normal,non_regular,proportion,half_width,seed"));
}

#[test]
fn verify_emits_json_lines() {
    let (code, out, err) = grrcensus(&["verify", "--suite", "lemma2.1", "--max-order", "8"]);
    assert_eq!(code, 0, "{err}");
    let records: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!records.is_empty());
    for key in ["group", "subgroup", "lemma", "count", "bound_num", "bound_den_exp", "holds"] {
        assert!(records[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_uses_a_custom_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("m.txt");
    std::fs::write(&manifest, "version 1\nsym:3\n").unwrap();
    let (code, out, _) = grrcensus(&["verify", "--suite", "lemma3.5+prop3.1", "--max-order", "6", "--corpus", manifest.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.contains("\"group\":\"sym:3\"")));
    assert!(out.contains("\"count\":16"));
}

#[test]
fn non_group_in_corpus_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gtab");
    std::fs::write(&bad, "2\n0 1\n1 1\n").unwrap();
    let manifest = dir.path().join("m.txt");
    std::fs::write(&manifest, format!("{}\n", bad.display())).unwrap();
    let (code, _, err) = grrcensus(&["verify", "--suite", "c-count", "--corpus", manifest.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(grrcensus(&["verify", "--suite", "lemma9.9"]).0, 2);
    assert_eq!(grrcensus(&["census", "--group", "nonsense:4"]).0, 2);
    assert_eq!(grrcensus(&["census"]).0, 2);
    assert_eq!(grrcensus(&["bounds", "--r", "2", "--c", "1"]).0, 2);
    assert_eq!(grrcensus(&["census", "--group", "cyclic:64", "--mode", "digraph"]).0, 2);
}

#[test]
fn bounds_report_vacuity() {
    let (code, out, _) = grrcensus(&["bounds", "--r", "16", "--c", "9"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["grr_proportion"]["vacuous"], true);
    assert_eq!(v["aut_exponent"], 16.0);
}

#[test]
fn scenarios_list_sym3_full() {
    let (code, out, _) = grrcensus(&["scenarios", "--group", "sym:3", "--strategy", "full"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["core"], serde_json::json!([0]));
    let (_, csv, _) = grrcensus(&["scenarios", "--group", "elem2:2", "--strategy", "aut", "--csv"]);
    assert_eq!(csv.lines().count(), 4);
}
