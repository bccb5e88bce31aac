use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_blockalg"))
        .args(args)
        .env_remove("BLOCKALG_DEFAULTS")
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (
        out.status.code().unwrap(),
        v,
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bracket_of_generators() {
    let (code, v, _) = run(&["bracket", "--x", "2,0", "--y", "0,1"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"],
        json!({"terms": [{"coeff": ["-1"], "monomial": [[2, 0]]}]})
    );
    let (_, v, _) = run(&["bracket", "--x", "1,0", "--y", "5,3"]);
    assert_eq!(v["result"]["terms"], json!([]));
    let (_, v, _) = run(&["bracket", "--x", "0,1", "--y", "-1,2"]);
    assert_eq!(v["result"]["terms"], json!([]));
}

#[test]
fn normalize_accepts_words() {
    let (code, v, _) = run(&[
        "normalize",
        "--element",
        r#"{"terms":[{"coeff":["1"],"word":[[2,0],[0,1]]},{"coeff":["0","1"],"word":[[1,0]]}]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"],
        json!({"terms": [
            {"coeff": ["0", "0", "1"], "monomial": []},
            {"coeff": ["1"], "monomial": [[0, 1], [2, 0]]},
            {"coeff": ["-1"], "monomial": [[2, 0]]}
        ]})
    );
}

#[test]
fn act_matches_hand_computation() {
    // x(2,0) x(0,1) w' = (x(0,1) - 1) w' for phi = 1
    let (code, v, _) = run(&[
        "act",
        "--element",
        r#"{"terms":[{"coeff":["1"],"monomial":[[2,0]]}]}"#,
        "--vector",
        r#"{"terms":[{"coeff":["1"],"monomial":[[0,1]]}]}"#,
        "--character",
        r#"{"kind":"constant","value":"1"}"#,
        "--ideal",
        r#"{"kind":"principal","monic":["-1","1"]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"],
        json!({"terms": [
            {"coeff": ["-1"], "monomial": []},
            {"coeff": ["1"], "monomial": [[0, 1]]}
        ]})
    );
}

#[test]
fn check_character_verdicts() {
    let (code, v, _) = run(&[
        "check-character",
        "--spec",
        r#"{"kind":"constant","value":"1"}"#,
        "--n-max",
        "1",
        "--s-max",
        "1",
        "--m-max",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["rank"], 1);
    assert_eq!(v["verdict"], "not good at truncation");

    let (code, v, _) = run(&[
        "check-character",
        "--spec",
        r#"{"kind":"factorial"}"#,
        "--n-max",
        "1",
        "--s-max",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["det_g"], "2");
    assert_eq!(v["verdict"], "passes at truncation");

    let (_, v, _) = run(&[
        "check-character",
        "--spec",
        r#"{"kind":"geometric","c":"1","q":"2/3"}"#,
    ]);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["rank"] == 1));
}

#[test]
fn solve_uses_truncation_defaults() {
    let (code, v, _) = run(&[
        "solve",
        "--character",
        r#"{"kind":"factorial"}"#,
        "--ideal",
        r#"{"kind":"principal","monic":["-2","1"]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["cutoff"], json!({"sum_max": 8, "i_max": 12}));
    assert_eq!(v["dimension"], 1);
    assert_eq!(
        v["basis"],
        json!([{"terms": [{"coeff": ["1"], "monomial": []}]}])
    );
}

#[test]
fn descent_reports_steps() {
    let (code, v, _) = run(&[
        "descent",
        "--vector",
        r#"{"terms":[{"coeff":["1"],"monomial":[[-1,0]]}]}"#,
        "--character",
        r#"{"kind":"factorial"}"#,
        "--ideal",
        r#"{"kind":"principal","monic":["-2","1"]}"#,
        "--sum-max",
        "6",
        "--i-max",
        "8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "whittaker");
    assert_eq!(v["vacuum_multiple"], true);
    assert!(!v["steps"].as_array().unwrap().is_empty());

    let (code, v, _) = run(&[
        "descent",
        "--vector",
        r#"{"terms":[{"coeff":["1"],"monomial":[[-1,0],[-1,0]]}]}"#,
        "--character",
        r#"{"kind":"factorial"}"#,
        "--max-steps",
        "1",
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["outcome"], "exhausted");
}

#[test]
fn demo_passes() {
    let (code, v, _) = run(&["demo-counterexample"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_defects_zero"], true);
    assert_eq!(v["vacuum_multiple"], false);
    let (code, _, _) = run(&[
        "demo-counterexample",
        "--ideal",
        r#"{"kind":"principal","monic":["0","1"]}"#,
    ]);
    assert_eq!(code, 0);
}
