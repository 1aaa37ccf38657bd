use std::process::Command;

use metacyclic::{metacyclic_groups_by_order, metacyclic_id, MetacyclicParams};

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_metacyclic")).args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn invariants_plain_and_json() {
    assert_eq!(run(&["invariants", "20", "4", "8", "11"]), ("4 20 4 3\n".into(), String::new(), 0));
    assert_eq!(run(&["invariants", "300", "30", "10", "181"]).0, "50 180 10 31\n");
    let (out, _, code) = run(&["invariants", "--json", "300", "30", "10", "181"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({"m": 50, "n": 180, "s": 10, "t": 31}));
}

#[test]
fn invalid_presentation_names_the_congruence() {
    let (out, err, code) = run(&["invariants", "2", "2", "2", "0"]);
    assert_eq!((out.as_str(), code), ("", 2));
    assert!(err.contains("gcd(t, m)"), "{err}");
    let (_, err, code) = run(&["invariants", "5", "2", "5", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("t^n"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["invariants", "1", "2"]).2, 2);
    assert_eq!(run(&["frobnicate"]).2, 2);
    assert_eq!(run(&["enumerate", "-3"]).2, 2);
}

#[test]
fn mcinv_records() {
    assert_eq!(run(&["mcinv", "8", "48", "4", "5"]).0, "8 48 4 4 1\n");
    assert_eq!(run(&["mcinv", "20", "4", "8", "11"]).0, "4 20 4 4 3\n");
    assert_eq!(run(&["mcinv", "1", "5", "1", "0"]).0, "1 5 1 1 0\n");
}

#[test]
fn iso_exit_status() {
    assert_eq!(run(&["iso", "100", "30", "10", "31", "300", "30", "10", "181"]), ("false\n".into(), String::new(), 1));
    assert_eq!(run(&["iso", "300", "10", "10", "31", "100", "30", "10", "31"]), ("true\n".into(), String::new(), 0));
    assert_eq!(run(&["iso", "1", "1", "1", "0", "1", "1", "1", "0"]).2, 0);
}

#[test]
fn enumerate_matches_library() {
    for order in [1u64, 12, 100, 200] {
        let (out, _, code) = run(&["enumerate", &order.to_string()]);
        assert_eq!(code, 0);
        let expected: String =
            metacyclic_groups_by_order(order, 100_000).unwrap().iter().map(|id| format!("{id}\n")).collect();
        assert_eq!(out, expected);
    }
    assert_eq!(run(&["enumerate", "100"]).0.lines().count(), 10);
    let (out, _, _) = run(&["enumerate", "200", "--json"]);
    assert_eq!(out.lines().count(), 22);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let p = MetacyclicParams::new(
            v["m"].as_u64().unwrap(),
            v["n"].as_u64().unwrap(),
            v["s"].as_u64().unwrap(),
            v["t"].as_u64().unwrap(),
        )
        .unwrap();
        assert_eq!(metacyclic_id(&p).unwrap().params(), p);
    }
}

#[test]
fn cap_exceeded_exit_3() {
    let (_, err, code) = run(&["enumerate", "200", "--max-order", "100"]);
    assert_eq!(code, 3);
    assert!(err.contains("cap"), "{err}");
    assert_eq!(run(&["oracle-check", "300"]).2, 3);
}

#[test]
fn construct_and_nilpotent() {
    assert_eq!(run(&["construct", "8", "48", "4", "4", "1"]).0, "8 48 4 5\n");
    assert_eq!(run(&["construct", "100", "2", "100", "100", "99"]).0, "100 2 100 99\n");
    let (_, err, code) = run(&["construct", "4", "20", "8", "4", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("not realizable"), "{err}");
    assert_eq!(run(&["construct", "4", "20", "4", "3", "1"]).2, 2);
    assert_eq!(run(&["nilpotent", "3", "2", "3", "2"]).0, "false\n");
    assert_eq!(run(&["nilpotent", "4", "4", "4", "3"]).0, "true\n");
    assert_eq!(run(&["nilpotent", "1", "200", "1", "0"]).0, "true\n");
}

#[test]
fn oracle_check_agrees() {
    let (out, _, code) = run(&["oracle-check", "24"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("AGREE"));
    let (out, _, _) = run(&["oracle-check", "16", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["agree"], serde_json::json!(true));
    assert_eq!(v["brute_classes"], v["invariant_classes"]);
}
