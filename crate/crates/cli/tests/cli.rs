use std::process::{Command, Output};

use serde_json::Value;

fn qcharlier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcharlier"))
        .args(args)
        .env_remove("QCHARLIER_MAX_SIZE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = qcharlier(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn triples(v: &Value) -> Vec<(u64, u64, i64, String)> {
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["a"].as_u64().unwrap(),
                t["x"].as_u64().unwrap(),
                t["q"].as_i64().unwrap(),
                t["c"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}

#[test]
fn stats_of_the_example_word() {
    let v = json(&["stats", "123144124"]);
    let s = &v["stats"];
    assert_eq!((s["ls"].as_u64(), s["lb"].as_u64()), (Some(13), Some(7)));
    assert_eq!((s["rs"].as_u64(), s["rb"].as_u64()), (Some(7), Some(11)));
}

#[test]
fn linearize_agrees_under_every_method() {
    let want: Vec<(u64, u64, i64, String)> = [
        (2, 1, 1),
        (2, 2, 2),
        (2, 3, 1),
        (3, 1, -1),
        (3, 2, -1),
        (3, 3, 1),
        (3, 4, 1),
    ]
    .iter()
    .map(|&(a, q, c)| (a, 0, q, c.to_string()))
    .collect();
    assert_eq!(triples(&json(&["linearize", "2", "2", "1"])), want);
    for m in ["formula", "bruteforce", "fixedpoints"] {
        assert_eq!(
            triples(&json(&["linearize", "2", "2", "1", "--method", m])),
            want,
            "{m}"
        );
    }
}

#[test]
fn poly_zero_is_one() {
    let v = json(&["poly", "0"]);
    assert_eq!(triples(&v), vec![(0, 0, 0, "1".to_string())]);
    assert_eq!(v["command"], "poly");
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["moments", "6"][..],
        &["verify", "all", "--max-size", "3"],
        &["classical", "poly", "3", "--csv"],
    ] {
        assert_eq!(qcharlier(args).stdout, qcharlier(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["stirling", "3", "1", "1"][..],
        &["verify", "nope"],
        &["stats", "211"],
        &["frobnicate"],
    ] {
        assert_eq!(qcharlier(args).status.code(), Some(2), "{args:?}");
    }
    let big = qcharlier(&[
        "linearize",
        "4",
        "4",
        "4",
        "--method",
        "fixedpoints",
        "--max-size",
        "6",
    ]);
    assert_eq!(big.status.code(), Some(2));
}

#[test]
fn large_triples_skip_enumeration() {
    let v = json(&["linearize", "5", "5", "5", "--max-size", "6"]);
    assert_eq!(
        v["params"]["methods"],
        serde_json::json!(["formula", "bruteforce"])
    );
}

#[test]
fn env_var_sets_the_budget() {
    let out = Command::new(env!("CARGO_BIN_EXE_qcharlier"))
        .args(["verify", "polynomials"])
        .env("QCHARLIER_MAX_SIZE", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["params"]["max_size"], 3);
    assert_eq!(v["criteria"][0]["clipped"], true);
    assert_eq!(v["criteria"][0]["passed"], true);
}

#[test]
fn verify_all_reports_every_criterion() {
    let v = json(&["verify", "all", "--max-size", "4"]);
    let cs = v["criteria"].as_array().unwrap();
    assert_eq!(cs.len(), 13);
    assert!(cs.iter().all(|c| c["passed"] == true));
}

#[test]
fn csv_tables() {
    let out = qcharlier(&["stirling", "2", "3", "2", "--csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "a,x,q,c\n0,0,0,2\n0,0,1,1\n"
    );
    let out = qcharlier(&["moments", "1", "--csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n,a,x,q,c\n0,0,0,0,1\n1,1,0,0,1\n"
    );
}
