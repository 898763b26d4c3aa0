use macexp_cli::{emit_report, run_with};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("macexp").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn expand_first_order_example() {
    let (code, out, _) = cli(&["expand", "--n", "2", "--r", "1", "--order", "1", "--degree", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "basis: m[1]\n[1 + b]\n");
}

#[test]
fn usage_errors_exit_two() {
    let (code, out, err) = cli(&["verify", "--identity", "scalar_part", "--n", "3", "--r", "5"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error: need 1 <= r <= n"), "{err}");
    assert!(err.contains("Usage:"));

    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["verify", "--identity", "no_such_identity", "--n", "2"]).0, 2);
    assert_eq!(cli(&["verify", "--suite", "all", "--degree", "0"]).0, 2);
    assert_eq!(cli(&["jack", "--n", "2", "--beta", "-1", "--degree", "2"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn empty_report_is_an_empty_array() {
    assert_eq!(emit_report(&[], true, false), "[]\n");
    let (code, out, _) = cli(&["verify", "--suite", "order1", "--n", "9", "--json"]);
    assert_eq!((code, out.as_str()), (0, "[]\n"));
}

#[test]
fn passing_and_failing_verdicts() {
    let (code, out, _) = cli(&["verify", "--identity", "ord2_matches", "--n", "2", "--r", "1", "--degree", "3", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["residual"], "zero");
    assert_eq!(v[0]["runtime_ms"], Value::Null);
    assert_eq!(v[0]["params"], serde_json::json!({"n": 2, "r": 1}));

    // The stated first-order form is off by β·C(n,r)·r(r-1)/2 for r >= 2.
    let (code, out, _) = cli(&["verify", "--identity", "ord1_matches", "--n", "2", "--r", "2", "--degree", "2", "--json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["status"], "fail");
    assert_eq!(v[0]["residual"]["rendering"], "m[1] -> b*m[1]; m[2] -> b*m[2]; m[1,1] -> b*m[1,1]");
}

#[test]
fn timings_fill_runtime() {
    let (_, out, _) =
        cli(&["verify", "--identity", "scalar_part", "--n", "3", "--r", "2", "--json", "--timings"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v[0]["runtime_ms"].is_u64());
    assert_eq!(v[0]["detail"], "F = 1 + t + t^2");
}

#[test]
fn text_report_and_tbinom() {
    let (code, out, _) = cli(&["verify", "--identity", "ord1_matches", "--n", "2", "--r", "1", "--degree", "2"]);
    assert_eq!((code, out.as_str()), (0, "PASS ord1_matches [n=2 r=1] degree=2\n"));
    let (code, out, _) = cli(&["tbinom", "--n", "3", "--r", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[3 1]_t = 1 + t + t^2\n"), "{out}");
}

#[test]
fn jack_at_negative_beta() {
    let (code, out, _) = cli(&["jack", "--n", "2", "--beta", "-1/3", "--degree", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("J[2] = m[2] - m[1,1]\n"), "{out}");
}

#[test]
fn witness_expectations() {
    assert_eq!(cli(&["witness", "--expect", "found"]).0, 0);
    assert_eq!(cli(&["witness", "--expect", "not-found"]).0, 1);
    assert_eq!(cli(&["witness", "--order-max", "3"]).0, 2);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("macexp-cli-test-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["witness", "--json", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), include_str!("golden/witness.json"));
    std::fs::remove_file(&path).unwrap();
}
