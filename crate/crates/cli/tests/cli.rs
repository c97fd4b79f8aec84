use std::process::Command;

use serde_json::{json, Value};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_frobvec")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, text) = run(args);
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

#[test]
fn fp_on_plane_example() {
    let plane = data("plane.json");
    let (code, v) = run_json(&["fp", "--p", "1", "--input", &plane]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], json!([2, 51]));
    assert_eq!(v["meta"]["lambda"], json!([4, 3, 6, 5, 6]));
    assert_eq!(v["meta"]["candidates"], json!(1835));
    for alg in ["normalform", "staircase"] {
        let (_, v) = run_json(&["fp", "--p", "1", "--algorithm", alg, "--input", &plane]);
        assert_eq!(v["result"], json!([2, 51]), "{alg}");
    }
}

#[test]
fn fp_infinite_is_a_string() {
    let (code, v) = run_json(&["fp", "--p", "1", "--input", &data("ray-deficient.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], json!("infinite"));
    let (_, v) = run_json(&["check-finite", "--input", &data("ray-deficient.json")]);
    assert_eq!(v["result"], json!(false));
}

#[test]
fn factorize_and_oracle_agree() {
    let n23 = data("n23.json");
    let (code, v) = run_json(&["factorize", "--element", "12", "--input", &n23]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], json!([[6, 0], [3, 2], [0, 4]]));
    let (_, o) = run_json(&["oracle", "--element", "12", "--input", &n23]);
    assert_eq!(o["result"], v["result"]);
    let (_, o) = run_json(&["oracle", "--p", "2", "--input", &n23]);
    assert_eq!(o["result"], json!([13]));
}

#[test]
fn fp_verify_and_f2() {
    let (_, v) = run_json(&["fp", "--p", "2", "--algorithm", "f2", "--verify", "--generators", "2;3"]);
    assert_eq!(v["result"], json!([13]));
    assert_eq!(v["meta"]["agrees"], json!(true));
    let (_, v) = run_json(&["fp", "--p", "0", "--algorithm", "numerical", "--generators", "4;6;101"]);
    assert_eq!(v["result"], json!([103]));
}

#[test]
fn groebner_and_indispensables() {
    let plane = data("plane.json");
    let (_, v) = run_json(&["groebner", "--verify", "--input", &plane]);
    assert_eq!(v["meta"]["size"], json!(14));
    assert_eq!(v["meta"]["minimal"], json!(false));
    let (_, v) = run_json(&["indispensable", "--verify", "--input", &plane]);
    assert_eq!(v["meta"]["count"], json!(9));
    assert_eq!(v["meta"]["generates_minimally"], json!(true));
    let (_, text) = run(&["groebner", "--format", "text", "--generators", "2;3"]);
    assert_eq!(text.trim(), "x1^3 - x2^2");
}

#[test]
fn nabla_components() {
    let (_, v) = run_json(&["nabla", "--element", "6", "--generators", "2;3"]);
    assert_eq!(v["result"], json!([[[3, 0]], [[0, 2]]]));
    let (_, v) = run_json(&["nabla", "--element", "12", "--generators", "2;3"]);
    assert_eq!(v["meta"]["components"], json!(1));
}

#[test]
fn glue_reports_bound_and_semigroup() {
    let (code, v) = run_json(&["glue", "--d", "2", "--gamma", "15", "--p", "1", "--verify", "--generators", "3;4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["generators"], json!([[6], [8], [15]]));
    assert_eq!(v["meta"]["bound"], json!([49]));
    assert_eq!(v["meta"]["verdict"], json!("equal"));
    assert_eq!(v["meta"]["oracle"], json!([49]));
    let (_, v) = run_json(&["glue", "--d", "2", "--gamma", "7", "--p", "0", "--generators", "3;4"]);
    assert_eq!(v["meta"]["bound"], json!([17]));
}

#[test]
fn emitted_semigroup_round_trips() {
    let (_, v) = run_json(&["glue", "--d", "3", "--gamma", "4,4", "--input", &data("plane.json")]);
    let s = frobvec::io::parse_semigroup(&v["result"].to_string()).unwrap();
    assert_eq!(frobvec::io::semigroup_to_value(&s.semigroup, s.order), v["result"]);
    assert!(!s.minimalized);
}

#[test]
fn minimalizes_input_with_warning() {
    let out = Command::new(env!("CARGO_BIN_EXE_frobvec"))
        .args(["fp", "--p", "1", "--input", &data("n234.json")])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stderr).contains("not minimal"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"], json!([7]));
    assert_eq!(v["meta"]["minimalized"], json!(true));
}

#[test]
fn errors_carry_codes() {
    let cases: [(&[&str], &str); 8] = [
        (&["fp", "--input", &data("broken.json")], "VALIDATION"),
        (&["fp", "--frobnicate", "--generators", "2;3"], "USAGE"),
        (&["fp", "--p", "0", "--input", &data("plane.json")], "UNSUPPORTED"),
        (&["fp", "--order", "lex", "--generators", "2;3"], "VALIDATION"),
        (&["glue", "--d", "2", "--gamma", "5", "--generators", "3;4"], "VALIDATION"),
        (&["factorize", "--element", "1,2", "--generators", "2;3"], "VALIDATION"),
        (&["fp", "--p", "-1", "--generators", "2;3"], "USAGE"),
        (&["fp", "--p", "9999999999999999999", "--generators", "2;3"], "OVERFLOW"),
    ];
    for (args, code) in cases {
        let (status, v) = run_json(args);
        assert_ne!(status, 0, "{args:?}");
        assert_eq!(v["error"]["code"], json!(code), "{args:?}");
    }
    let (status, v) = run_json(&["oracle", "--p", "1", "--budget", "0", "--input", &data("plane.json")]);
    assert_ne!(status, 0);
    assert_eq!(v["error"]["code"], json!("ORACLE_BUDGET"));
}

#[test]
fn text_format() {
    let (code, text) = run(&["fp", "--p", "1", "--format", "text", "--generators", "2;3"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "F_1(S) = (7)");
}
