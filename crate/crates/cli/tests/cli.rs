use std::process::{Command, Output};

use serde_json::Value;

fn quadscroll(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadscroll")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = quadscroll(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (v, out.status.code().expect("exit code"))
}

fn field<'a>(v: &'a Value, block: usize, key: &str) -> &'a Value {
    &v["blocks"][block]["fields"][key]
}

#[test]
fn scroll_solve_twelve() {
    let (v, code) = json(&["scroll", "solve", "12"]);
    assert_eq!(code, 0);
    let values: Vec<i64> = v["blocks"][0]["rows"].as_array().unwrap().iter().map(|r| r["value"].as_i64().unwrap()).collect();
    assert_eq!(values, [12, 18, 0, 18, 0, 0, 6, 24]);
    assert_eq!(field(&v, 1, "g"), 10);
    assert_eq!(field(&v, 1, "χ"), 2);
}

#[test]
fn scroll_table_has_five_rows() {
    let (v, code) = json(&["table", "scrolls"]);
    assert_eq!(code, 0);
    let rows = v["blocks"][0]["rows"].as_array().unwrap();
    let labels: Vec<&str> = rows.iter().map(|r| r["type"]["text"].as_str().unwrap()).collect();
    assert_eq!(labels, ["C", "D", "F", "L", "O"]);
    assert!(rows.iter().all(|r| r["d"]["status"] == "verified"));
}

#[test]
fn errata_entries_are_confirmed() {
    let (v, code) = json(&["errata"]);
    assert_eq!(code, 0);
    let rows = v["blocks"][0]["rows"].as_array().unwrap();
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["k3", "c3", "chi-t2", "spinor-c4", "lambda-pairing", "hc-values"]);
    assert!(rows.iter().all(|r| r["confirmed"] == "pass"));
}

#[test]
fn porteous_degrees_under_both_pairings() {
    let expr = "c3(S'(1))^2 - c2(S'(1)) c4(S'(1))";
    let (parity, _) = json(&["chow", "-n", "6", expr]);
    let (literal, _) = json(&["chow", "-n", "6", "--pairing", "kronecker", expr]);
    assert_eq!(field(&parity, 0, "degree"), "0");
    assert_eq!(field(&literal, 0, "degree"), "4");
}

#[test]
fn invariants_at_degree_twelve() {
    let (v, code) = json(&["invariants", "12", "10", "2", "2"]);
    assert_eq!(code, 0);
    let got: Vec<i64> = ["KL²", "K²L", "K³", "c₂L"].iter().map(|k| field(&v, 0, k).as_i64().unwrap()).collect();
    assert_eq!(got, [-6, -6, 12, 24]);
}

#[test]
fn negative_arguments_are_accepted() {
    let (v, code) = json(&["invariants", "10", "16", "15", "-5"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn fourfold_scan_finds_only_four() {
    let (v, _) = json(&["scroll", "fourfold-scan", "--max", "100"]);
    assert_eq!(field(&v, 0, "solvable degrees"), &serde_json::json!([4]));
}

#[test]
fn exclusions_leave_three_degrees() {
    let (v, code) = json(&["exclude", "pairs"]);
    assert_eq!(code, 0);
    assert_eq!(field(&v, 1, "survivors"), &serde_json::json!([6, 8, 12]));
}

#[test]
fn cayley_presentation() {
    let (v, code) = json(&["verify", "presentation", "C(-1) -> O^3"]);
    assert_eq!(code, 0);
    assert_eq!(field(&v, 1, "c(I_X(l))"), "1 + 3h + 6h^2 + 9h^3 + 9h^4");
    assert_eq!(field(&v, 2, "d"), 12);
}

#[test]
fn verification_failure_exits_one() {
    assert_eq!(quadscroll(&["verify", "presentation", "O(-1) -> O(1)"]).status.code(), Some(1));
    let dir = std::env::temp_dir().join(format!("quadscroll-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.json")).unwrap();
    // Type F with a wrong sectional genus
    let mut v: Value = serde_json::from_str(&text).unwrap();
    let f = v["types"].as_array_mut().unwrap().iter_mut().find(|t| t["label"] == "F").unwrap();
    f["g"] = 2.into();
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = quadscroll(&["verify", "type", "F", "--catalog", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let ok = quadscroll(&["verify", "type", "all", "--catalog", concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.json")]);
    assert_eq!(ok.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["invariants", "7", "1", "1", "1"], &["table", "d12"], &["chow", "h +"], &["verify", "type", "J"]] {
        let out = quadscroll(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn errata_flag_appends_the_report() {
    let out = quadscroll(&["scroll", "fiber-cuts", "--errata"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("repaired formulas"));
    assert!(text.contains("hc-values"));
}
