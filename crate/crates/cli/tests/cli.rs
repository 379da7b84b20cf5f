use std::path::PathBuf;
use std::process::{Command, Output};

use qtop_core::hopf::QuantumGroup;
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn qtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtop")).args(args).output().expect("qtop runs")
}

fn json(args: &[&str]) -> Value {
    let out = qtop(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn smatrix_at_five() {
    let v = json(&["--r", "5", "smatrix"]);
    assert_eq!(v["invertible"], Value::Bool(true));
    let m = v["matrix"].as_array().unwrap();
    assert_eq!((m.len(), m[0].as_array().unwrap().len()), (2, 2));
    let h = QuantumGroup::new(5).unwrap();
    assert_eq!(m[1][1]["coeffs"], h.field().int(-1).to_json()["coeffs"]);
}

#[test]
fn verlinde_counts() {
    for (r, g, want) in [("5", "1", 2), ("3", "1", 1), ("5", "2", 5)] {
        let v = json(&["--r", r, "verlinde", "--genus", g]);
        assert_eq!(v["dim"], want, "r={} g={}", r, g);
    }
}

#[test]
fn renormalized_unknot() {
    // r^{-3/2} {1}′
    let h = QuantumGroup::new(3).unwrap();
    let fl = h.field();
    let r32 = &fl.int(3) * &fl.gauss_sqrt_r();
    let want = &r32.inv().unwrap() * &fl.qbrace_prime(1);
    let v = json(&["--r", "3", "lprime", "--diagram", &fixture("unknot_P0.tg")]);
    // compare exact coefficients; the float approximation need not survive a JSON round trip bit for bit
    let want = &want.to_json()["coeffs"];
    assert_eq!(&v["value"]["coeffs"], want);
    let cut = json(&["--r", "3", "lprime", "--diagram", &fixture("unknot_P0.tg"), "--cut", "1:0"]);
    assert_eq!(&cut["value"]["coeffs"], want);
    // shipped fixtures are found by name
    let by_name = json(&["--r", "3", "lprime", "--diagram", "unknot_P0.tg"]);
    assert_eq!(&by_name["value"]["coeffs"], want);
}

#[test]
fn closed_invariants() {
    let v = json(&["--r", "3", "hennings", "--diagram", &fixture("s2xs1.tg")]);
    assert_eq!(v["exact"], "0");
    let v = json(&["--r", "5", "rt", "--diagram", &fixture("s2xs1.tg")]);
    assert_eq!(v["exact"], "1");
    let v = json(&["--r", "3", "rt", "--diagram", &fixture("lens_3_1.tg")]);
    assert!(v["value"]["approx"].is_array());
}

#[test]
fn tables_list_constants() {
    let v = json(&["--r", "5", "tables"]);
    assert_eq!(v["qdim"].as_object().unwrap().len(), 9);
    assert_eq!(v["modified_trace"].as_object().unwrap().len(), 4);
    for theory in ["semisimple", "nonsemisimple"] {
        for key in ["D", "delta", "delta_plus", "delta_minus"] {
            assert!(v[theory][key]["coeffs"].is_array(), "{}.{}", theory, key);
        }
    }
}

#[test]
fn verify_passes_at_three() {
    let v = json(&["--r", "3", "verify"]);
    assert_eq!(v["passed"], Value::Bool(true));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 30);
    assert!(checks.iter().all(|c| c["passed"] == Value::Bool(true)));
    let table = qtop(&["--r", "3", "verify", "--format", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert_eq!(text.lines().count(), checks.len());
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn output_is_deterministic() {
    let args = ["--r", "3", "lprime", "--diagram", "hopf_P0_P0.tg"];
    assert_eq!(qtop(&args).stdout, qtop(&args).stdout);
    let args = ["--r", "5", "tables", "--format", "table"];
    assert_eq!(qtop(&args).stdout, qtop(&args).stdout);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| qtop(args).status.code();
    // parse and argument errors
    assert_eq!(code(&["--r", "4", "smatrix"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["rt", "--diagram", "does_not_exist.tg"]), Some(1));
    let bad = std::env::temp_dir().join("qtop_bad_diagram.tg");
    std::fs::write(&bad, "lcoev(V1); x+(V1").unwrap();
    assert_eq!(code(&["rt", "--diagram", bad.to_str().unwrap()]), Some(1));
    assert_eq!(code(&["lprime", "--diagram", "unknot_P0.tg", "--cut", "one"]), Some(1));
    // inadmissible input
    assert_eq!(code(&["--r", "3", "lprime", "--diagram", "unknot_V1.tg"]), Some(2));
    assert_eq!(code(&["--r", "3", "lprime", "--diagram", "unknot_P0.tg", "--cut", "7:0"]), Some(2));
    assert_eq!(code(&["--r", "3", "hennings", "--diagram", "r3_left.tg"]), Some(2));
}
