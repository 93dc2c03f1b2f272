//! End-to-end checks of the installed binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totaldom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn dt_friendship_example() {
    let out = run(&["dt", "--family", "f", "--q", "4", "--n", "1", "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0 0 4 4 1"), "{text}");
    assert!(text.contains("x^4+4x^3+4x^2"), "{text}");
}

#[test]
fn dt_methods_agree_via_gen_round_trip() {
    let dir = std::env::temp_dir().join(format!("totaldom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("g2.edges");
    let out = run(&["gen", "--family", "g-chain", "--n", "2", "-o", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let from_file = run(&["dt", "--input", file.to_str().unwrap(), "--method", "oracle"]);
    let from_family = run(&["dt", "--family", "g-chain", "--n", "2", "--method", "oracle"]);
    let from_reduction = run(&["dt", "--input", file.to_str().unwrap(), "--method", "reduction"]);
    let from_formula = run(&["dt", "--family", "g-chain", "--n", "2", "--method", "formula"]);
    assert_eq!(stdout(&from_file), stdout(&from_family));
    assert_eq!(stdout(&from_file), stdout(&from_reduction));
    assert_eq!(stdout(&from_file), stdout(&from_formula));
    assert!(stdout(&from_file).contains("0 0 1 4 8 5 1"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dt_trace_prints_steps() {
    let out = run(&["dt", "--family", "t-chain", "--n", "3", "--method", "reduction", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("final:"), "{text}");
    assert!(text.contains("0 0 1 5 16 16 7 1"), "{text}");
}

#[test]
fn dt_fidelity_switches_formula() {
    let printed = run(&["dt", "--family", "f", "--q", "4", "--n", "2", "--method", "formula", "--fidelity", "printed"]);
    let derived = run(&["dt", "--family", "f", "--q", "4", "--n", "2", "--method", "formula", "--fidelity", "derived"]);
    assert_eq!(printed.status.code(), Some(0));
    assert_eq!(derived.status.code(), Some(0));
    assert_ne!(stdout(&printed), stdout(&derived));
    assert!(stdout(&derived).contains("0 0 0 4 16 17 7 1"));
}

#[test]
fn gamma_and_no_tds() {
    let out = run(&["gamma", "--family", "f", "--q", "4", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "4");

    // K_1 has no total dominating set
    let dir = std::env::temp_dir().join(format!("totaldom-k1-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("k1.edges");
    std::fs::write(&file, "1 0\n").unwrap();
    let out = run(&["gamma", "--input", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "no total dominating set");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn roots_h3() {
    let out = run(&["roots", "--family", "h3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-2") && text.contains("0"), "{text}");
    assert!(text.contains("within"), "{text}");
}

#[test]
fn recognize_h3_both_ways() {
    let out = run(&["recognize-h3", "--family", "h3", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("H(3) over base of order 3"));

    let dir = std::env::temp_dir().join(format!("totaldom-c6-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("c6.edges");
    std::fs::write(&file, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
    let out = run(&["recognize-h3", "--input", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "not H(3)");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn audit_barbell_exits_3_with_json_mismatches() {
    let out = run(&["audit", "--family", "barbell", "--min", "2", "--max", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["summary"]["mismatched"], 3);
    assert!(report["records"][0]["edges"].is_string());
}

#[test]
fn audit_ortho_exits_clean() {
    let out = run(&["audit", "--family", "o-chain", "--max", "3", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mismatched 0"));
}

#[test]
fn identities_run_and_pass() {
    let out = run(&["identities", "--samples", "5", "--max-order", "6", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["all_passed"], true);
}

#[test]
fn usage_and_guard_exit_codes() {
    let out = run(&["dt"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["dt", "--family", "nope", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["dt", "--family", "q-chain", "--n", "4", "--guard", "8"]);
    assert_eq!(out.status.code(), Some(2));
}
