use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::{env, fs};

fn cutalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cutalg(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).expect("valid json")
}

fn manifest_path(parts: &[&str]) -> PathBuf {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.extend(parts);
    p
}

/// Compares against `tests/golden/<name>.txt`; `CUTALG_BLESS=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let path = manifest_path(&["tests", "golden", &format!("{name}.txt")]);
    let actual = stdout(args);
    if env::var_os("CUTALG_BLESS").is_some() {
        fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {path:?}"));
    assert_eq!(actual, expected, "golden {name}");
}

#[test]
fn golden_ideal_p3() {
    golden("ideal_p3", &["ideal", "P3"]);
}

#[test]
fn golden_ideal_k4() {
    golden("ideal_k4", &["ideal", "K4"]);
}

#[test]
fn golden_betti_k2_k1_k3() {
    golden("betti_k2_k1_k3", &["betti", "K2#K1#K3"]);
}

#[test]
fn golden_betti_c4() {
    golden("betti_c4", &["betti", "C4"]);
}

#[test]
fn golden_polytope_p3() {
    golden("polytope_p3", &["polytope", "P3"]);
}

#[test]
fn golden_certify_ohsugi() {
    golden("certify_ohsugi", &["certify", "ohsugi"]);
}

#[test]
fn golden_table1() {
    golden("table1", &["table1", "--max-n", "4"]);
}

#[test]
fn zero_ideal_of_an_edge() {
    let v = json(&["ideal", "n=2;1-2"]);
    assert_eq!(v["zero"], true);
    assert_eq!(v["groebner_basis"].as_array().unwrap().len(), 0);
}

#[test]
fn elimination_route_prints_the_same_basis() {
    let a = json(&["ideal", "C4"]);
    let b = json(&["ideal", "--elimination", "C4"]);
    assert_eq!(a["groebner_basis"], b["groebner_basis"]);
}

#[test]
fn betti_2k2() {
    let v = json(&["betti", "2K2"]);
    assert_eq!((v["projdim"].as_u64(), v["reg"].as_u64()), (Some(4), Some(2)));
    assert_eq!(v["truncated"], false);
}

#[test]
fn second_prime_is_reported() {
    let v = json(&["--check-prime", "101", "betti", "C4"]);
    assert_eq!(v["prime_check"]["agree"], true);
    let t = stdout(&["--prime", "101", "ideal", "P3"]);
    assert!(t.contains("over F_101"));
}

#[test]
fn retracts_and_classify() {
    let v = json(&["retracts", "C4"]);
    let names: Vec<&str> = v["retracts"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|r| r["name"].as_str())
        .collect();
    assert_eq!(names, ["K2", "P3", "K3", "C4"]);
    let c = json(&["classify", "K2#K1#K3"]);
    assert_eq!(c["all_agree"], true);
    assert_eq!(c["reports"].as_array().unwrap().len(), 7);
}

#[test]
fn face_map_certificate() {
    let v = json(&["certify", "face-map", "K4", "--edge", "1-2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["common_neighbors"], serde_json::json!([3, 4]));
}

fn code(args: &[&str]) -> Option<i32> {
    cutalg(args).status.code()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["ideal", "Q9"]), Some(2));
    assert_eq!(code(&["ideal", "n=3; 1-1"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["--prime", "10", "ideal", "P3"]), Some(2));
    assert_eq!(code(&["--check-prime", "32003", "ideal", "P3"]), Some(2));
    assert_eq!(code(&["certify", "face-map", "P3", "--edge", "1-3"]), Some(2));
    assert_eq!(code(&["ideal", "K7"]), Some(3));
    assert_eq!(code(&["polytope", "K5"]), Some(3));
    assert_eq!(code(&["--timeout", "1", "betti", "P5"]), Some(4));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "betti", "K4-e"][..],
        &["polytope", "K4-e"],
        &["retracts", "K4"],
        &["classify", "P4"],
    ] {
        assert_eq!(cutalg(args).stdout, cutalg(args).stdout, "{args:?}");
    }
}

#[test]
fn json_matches_shipped_schemas() {
    let cases: [(&str, &[&str]); 8] = [
        ("ideal", &["ideal", "2K2"]),
        ("betti", &["--check-prime", "101", "betti", "K2#K1#K3"]),
        ("polytope", &["polytope", "C4"]),
        ("retracts", &["retracts", "K4-e"]),
        ("classify", &["classify", "C4"]),
        ("table1", &["--check-prime", "101", "table1", "--max-n", "3"]),
        ("certify-ohsugi", &["certify", "ohsugi"]),
        ("certify-face-map", &["certify", "face-map", "C4", "--edge", "2-3"]),
    ];
    for (schema, args) in cases {
        let text = fs::read_to_string(manifest_path(&["schemas", &format!("{schema}.json")])).unwrap();
        let schema_value: Value = serde_json::from_str(&text).unwrap();
        let validator = jsonschema::validator_for(&schema_value).expect("schema compiles");
        let instance = json(args);
        let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{schema}: {errors:?}");
        assert_eq!(instance["schema"], 1);
    }
}
