use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reflect-rings"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    let _ = std::fs::remove_file(&p);
    p
}

/// Every number in the report is a string.
fn no_raw_numbers(v: &Value) -> bool {
    match v {
        Value::Number(_) => false,
        Value::Array(xs) => xs.iter().all(no_raw_numbers),
        Value::Object(m) => m.values().all(no_raw_numbers),
        _ => true,
    }
}

#[test]
fn cubic_on_check_example() {
    let out = run(&["cubic-on-check", "--max", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "reflect-rings/1");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["checked_count"], "200");
    assert!(no_raw_numbers(&v));
}

#[test]
fn quad_on_check_example() {
    let out = run(&["quad-on-check", "--max", "300"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "pass");
}

#[test]
fn quad_superdisc_counts() {
    let v = json(&run(&["quad-superdisc", "--invariant", "60"]));
    let d = &v["data"];
    assert_eq!((d["q"].as_str(), d["q2"].as_str(), d["qplus"].as_str(), d["q2plus"].as_str()), (Some("18"), Some("8"), Some("13"), Some("5")));
    assert_eq!(d["classes"].as_array().unwrap().len(), 18);
    let real = json(&run(&["quad-superdisc", "--invariant", "60", "--even-b", "--real"]));
    assert_eq!(real["data"]["classes"].as_array().unwrap().len(), 5);
}

#[test]
fn cubic_count_with_conditions() {
    let v = json(&run(&["cubic-count", "--disc", "-27", "--traced"]));
    assert_eq!(v["data"]["h"], "1/2");
    let v = json(&run(&["cubic-count", "--disc", "1"]));
    assert_eq!(v["data"]["h"], "1/6");
    let out = run(&["cubic-count", "--disc", "-23", "--split", "5:12", "--marked-root", "7"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["cubic-count", "--disc", "0"][..],
        &["cubic-count", "--disc", "abc"],
        &["cubic-count", "--disc", "-23", "--split", "4:111"],
        &["quartic-count", "--resolvent", "1,2"],
        &["shintani", "--sign", "x", "--max", "5"],
        &["fourier-level", "--p", "4", "--f", "1", "--e", "1", "--h0", "1"],
        &["classgroup", "--disc", "16"],
        &["no-such-command"],
        &["disc-reduction", "--p", "5"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn violations_exit_one_with_details() {
    let out = run(&["bq-check", "--resolvent", "6,-3,-2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    assert!(!v["violations"].as_array().unwrap().is_empty());
    let out = run(&["disc-reduction", "--p", "2", "--disc", "280"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_reproducible() {
    let a = run(&["scholz-check", "--max", "60"]);
    let b = bin().args(["scholz-check", "--max", "60"]).env("REFLECT_RINGS_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["cubic-count", "--disc", "-108", "--seed", "99"]);
    let d = run(&["cubic-count", "--disc", "-108"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn seed_changes_only_the_random_pairs() {
    let a = json(&run(&["disc-reduction", "--random", "5", "--seed", "1"]));
    let b = json(&run(&["disc-reduction", "--random", "5", "--seed", "2"]));
    let a2 = json(&run(&["disc-reduction", "--random", "5", "--seed", "1"]));
    assert_eq!(a, a2);
    assert_ne!(a["parameter_range"], b["parameter_range"]);
    assert_eq!((a["status"].as_str(), b["status"].as_str()), (Some("pass"), Some("pass")));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = bin().args(["classgroup", "--disc", "-23"]).env("REFLECT_RINGS_THREADS", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resume_skips_finished_items_and_matches_a_fresh_run() {
    let state = scratch("cubic_resume.json");
    let s = state.to_str().unwrap();
    let fresh = run(&["cubic-on-check", "--max", "40"]);
    let first = run(&["cubic-on-check", "--max", "40", "--resume", s]);
    assert!(state.exists());
    // a rerun finds everything done and reproduces the report
    let second = run(&["cubic-on-check", "--max", "40", "--resume", s]);
    assert_eq!(fresh.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
    // a state file from a different sweep is refused
    let other = run(&["cubic-on-check", "--max", "41", "--resume", s]);
    assert_eq!(other.status.code(), Some(2));
}

#[test]
fn resume_fills_in_a_partial_state() {
    let state = scratch("quad_resume.json");
    let s = state.to_str().unwrap();
    run(&["quad-on-check", "--max", "50", "--resume", s]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&state).unwrap()).unwrap();
    let done = v["done"].as_object_mut().unwrap();
    let keep: Vec<String> = done.keys().take(10).cloned().collect();
    done.retain(|k, _| keep.contains(k));
    std::fs::write(&state, v.to_string()).unwrap();
    let resumed = run(&["quad-on-check", "--max", "50", "--resume", s]);
    let fresh = run(&["quad-on-check", "--max", "50"]);
    assert_eq!(resumed.stdout, fresh.stdout);
}

#[test]
fn shintani_csv() {
    let out = run(&["shintani", "--sign", "-", "--max", "4", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,h");
    assert_eq!(lines.len(), 5);
    assert!(lines[3].starts_with("3,"));
}

#[test]
fn subring_commands() {
    let out = run(&["subring-zeta", "--sigma", "111", "--q", "2", "--terms", "4", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "d,count\n0,1\n1,3\n2,4\n3,6\n");
    let ring = scratch("split_ring.json");
    std::fs::write(&ring, "[[[1,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,1,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,1]]]").unwrap();
    let v = json(&run(&["subring-oracle", "--ring", ring.to_str().unwrap(), "--p", "2", "--k", "3", "--sigma", "111"]));
    assert_eq!(v["status"], "pass");
    assert_eq!(v["data"]["count"], "6");
}

#[test]
fn fourier_and_boxes() {
    let out = run(&["fourier-level", "--p", "3", "--f", "1", "--e", "1", "--h0", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&run(&["box-search", "--cubic", "-1,-1,0,1", "--bound", "2"]));
    assert_eq!(v["data"]["classes_found"], "2");
    assert_eq!(v["data"]["weight"], "1");
}

#[test]
fn pretty_output_is_a_table() {
    let out = run(&["classgroup", "--disc", "-23", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("classgroup  [PASS]"));
    assert!(text.contains("three_torsion: 3"));
}

#[test]
fn verify_all_with_no_budget_skips_everything() {
    let out = run(&["verify-all", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert!(v["data"]["checks"].as_array().unwrap().iter().all(|c| c["status"] == "skipped"));
}
