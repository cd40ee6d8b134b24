use std::process::{Command, Output};

use serde_json::Value;

fn nilhom(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nilhom"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("NILHOM_THREADS", t),
        None => cmd.env_remove("NILHOM_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn golden_table_is_byte_exact() {
    let out = nilhom(
        &[
            "homology", "sp", "--n", "2", "--k", "2", "--format", "paper",
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    let expected = include_str!("../fixtures/sp_n2_k2.txt");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
    let first = expected.lines().next().unwrap();
    let last = expected.lines().last().unwrap();
    assert_eq!(first, "0  (0, 0, 0, 0)");
    assert_eq!(last, "11  (-7, -7, 0, 0)");
}

#[test]
fn oracle_output_matches_kostant_output() {
    let a = nilhom(
        &[
            "homology", "gl", "--n", "2", "--k", "1", "--l", "1", "--format", "tsv",
        ],
        None,
    );
    let b = nilhom(
        &[
            "homology", "gl", "--n", "2", "--k", "1", "--l", "1", "--format", "tsv", "--oracle",
        ],
        None,
    );
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["homology", "sp", "--n", "2", "--k", "2", "--oracle"];
    let one = nilhom(&args, Some("1"));
    let four = nilhom(&args, Some("4"));
    let default = nilhom(&args, None);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, default.stdout);
    let again = nilhom(&args, Some("4"));
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&nilhom(&["homology", "sp", "--n", "1", "--k", "1"], None)),
        0
    );
    assert_eq!(
        code(&nilhom(
            &["verify", "defs-agree", "--n", "0", "--k", "1"],
            None
        )),
        0
    );
    assert_eq!(
        code(&nilhom(&["verify", "counts", "--n", "1", "--k", "0"], None)),
        1
    );
    assert_eq!(code(&nilhom(&["homology", "sp", "--n", "1"], None)), 2);
    assert_eq!(
        code(&nilhom(&["homology", "xx", "--n", "1", "--k", "1"], None)),
        2
    );
    assert_eq!(
        code(&nilhom(
            &["modrule", "sp", "--lambda", "[1,2]", "--n", "1"],
            None
        )),
        2
    );
    assert_eq!(
        code(&nilhom(
            &["modrule", "sp", "--lambda", "1,2", "--n", "1"],
            None
        )),
        2
    );
    assert_eq!(
        code(&nilhom(
            &["homology", "sp", "--n", "1", "--k", "1"],
            Some("zero")
        )),
        2
    );
    assert_eq!(code(&nilhom(&["--help"], None)), 0);
}

#[test]
fn verify_emits_json_report() {
    let out = nilhom(&["verify", "counts", "--max-n", "2", "--max-k", "2"], None);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["checked"], 4);

    let out = nilhom(
        &["verify", "oracle", "--family", "sp", "--n", "2", "--k", "2"],
        None,
    );
    assert_eq!(code(&out), 0);

    let out = nilhom(&["verify", "counts", "--n", "1", "--k", "0"], None);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn modrule_json() {
    let out = nilhom(&["modrule", "sp", "--lambda", "[1,1,1]", "--n", "1"], None);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["index"], 1);
    assert_eq!(v["tau"], serde_json::json!([1]));
    assert_eq!(v["agree"], true);
    assert_eq!(v["strips"].as_array().unwrap().len(), 1);
}

#[test]
fn writes_output_file() {
    let dir = std::env::temp_dir().join(format!("nilhom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.txt");
    let out = nilhom(
        &[
            "homology",
            "sp",
            "--n",
            "1",
            "--k",
            "1",
            "--format",
            "paper",
            "--output",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 4);
    std::fs::remove_dir_all(&dir).unwrap();
}
