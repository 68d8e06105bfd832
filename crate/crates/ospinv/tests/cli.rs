//! Black-box tests of the `ospinv` binary: exit codes, golden output,
//! determinism across worker counts, and the file/format plumbing.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ospinv"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary must run")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

#[test]
fn omega_output_matches_golden_files() {
    for (m, n) in [(1, 0), (1, 1), (2, 1), (1, 2)] {
        let out = run(&["omega", "--m", &m.to_string(), "--n", &n.to_string()]);
        assert!(out.status.success(), "omega m={m} n={n} failed");
        let golden = std::fs::read(golden_dir().join(format!("omega_m{m}_n{n}.json")))
            .expect("golden file present");
        assert_eq!(
            out.stdout, golden,
            "omega m={m} n={n} drifted from its golden serialization"
        );
    }
}

#[test]
fn omega_rejects_m_zero() {
    let out = run(&["omega", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--m"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown suite") && err.contains("identities"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["verify", "--suite", "pseudo", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn passing_suite_exits_zero_with_schema_json() {
    let out = run(&["verify", "--suite", "pseudo", "--m", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["suite"], "pseudo");
    assert!(doc["checks"]
        .as_array()
        .map(|a| !a.is_empty())
        .unwrap_or(false));
}

#[test]
fn reports_are_byte_identical_across_worker_counts() {
    let one = run(&["verify", "--suite", "structure", "--threads", "1"]);
    let four = run(&["verify", "--suite", "structure", "--threads", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);

    let env_threads = bin()
        .args(["verify", "--suite", "structure"])
        .env("OSPINV_THREADS", "2")
        .output()
        .expect("binary must run");
    assert_eq!(env_threads.stdout, one.stdout);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("ospinv-cli-test-{}.json", std::process::id()));
    let piped = run(&["verify", "--suite", "invariance", "--m", "1", "--n", "1"]);
    let filed = run(&[
        "verify",
        "--suite",
        "invariance",
        "--m",
        "1",
        "--n",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(filed.status.code(), Some(0));
    assert!(filed.stdout.is_empty(), "--out must silence stdout");
    let written = std::fs::read(&path).expect("report file written");
    std::fs::remove_file(&path).ok();
    assert_eq!(written, piped.stdout);
}

#[test]
fn text_format_renders_a_summary() {
    let out = run(&["verify", "--suite", "osp22", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("suite: osp22"));
    assert!(text.contains("summary: "));
    assert!(text.contains("[pass]"));
}

#[test]
fn tensor_size_cap_is_a_usage_error() {
    let out = run(&["tensor", "--m", "2", "--n", "2", "--power", "12"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn decompose_and_tensor_shorthands_pass() {
    let out = run(&["decompose", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(doc["suite"], "decomposition");

    let out = run(&["tensor", "--power", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(doc["suite"], "tensor");
}
