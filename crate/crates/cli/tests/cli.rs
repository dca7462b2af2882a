use std::path::Path;
use std::process::{Command, Output};

fn run_in(dir: &Path, args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_congruence-lab"));
    cmd.current_dir(dir)
        .args(args)
        .env_remove("CONGRUENCE_LAB_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn thm_1_1_small_grid_holds() {
    let o = run(&[
        "verify", "thm-1.1", "--m", "3", "--n-max", "6", "--r-max", "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("status   held"));
}

#[test]
fn conj_1_3_json_report() {
    let o = run(&[
        "verify", "conj-1.3", "--n", "7", "--rs-max", "5", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["claim"], "conj-1.3");
    assert_eq!(v["status"], "held");
    assert_eq!(v["moduli"], serde_json::json!(["3432"]));
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert!(v["checked"].as_u64().unwrap() > 0);
}

#[test]
fn unknown_claim_is_usage_error() {
    let o = run(&["verify", "bogus"]);
    assert_eq!(o.status.code(), Some(64));
    let err = stderr(&o);
    assert!(
        err.contains("thm-1.1") && err.contains("conj-6.19"),
        "{err}"
    );
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(
        run(&["verify", "thm-1.1", "--grid", "q=1"]).status.code(),
        Some(64)
    );
    assert_eq!(
        run(&["verify", "thm-1.1", "--workers", "0"]).status.code(),
        Some(64)
    );
    assert_eq!(run(&["search", "nope"]).status.code(), Some(64));
    assert_eq!(run(&["identity", "nope"]).status.code(), Some(64));
    assert_eq!(run(&["table", "--xs", "10,1"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn conjecture_counterexample_exits_3_and_writes_findings() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(
        dir.path(),
        &[
            "verify", "conj-6.2", "--n", "3", "--a-max", "1", "--r-max", "0",
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(3));
    let lines = std::fs::read_to_string(dir.path().join("findings.jsonl")).unwrap();
    let first: serde_json::Value = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert_eq!(first["claim"], "conj-6.2");
    assert_eq!(first["value"], "16800");
    assert_eq!(first["modulus"], "20");
}

#[test]
fn held_run_writes_no_findings() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["verify", "thm-2.1", "--n-max", "3"], &[]);
    assert!(!dir.path().join("findings.jsonl").exists());
}

#[test]
fn json_is_byte_identical_across_runs_and_workers() {
    let args = [
        "verify",
        "thm-1.2",
        "--grid",
        "m=3,n-max=4,r=2",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&[&args[..], &["--workers", "1"]].concat());
    let c = run(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn budget_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(
        dir.path(),
        &["verify", "thm-1.1"],
        &[("CONGRUENCE_LAB_BUDGET", "10")],
    );
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("budget 10"));
    let o = run_in(
        dir.path(),
        &[
            "verify",
            "thm-1.1",
            "--budget",
            "1000000000",
            "--n-max",
            "3",
        ],
        &[("CONGRUENCE_LAB_BUDGET", "10")],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        run(&["verify", "thm-1.1", "--budget", "0"]).status.code(),
        Some(64)
    );
}

#[test]
fn list_5_1_search() {
    let o = run(&["search", "list-5.1", "--bound", "300", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 36);
    assert_eq!(v["hits"][0], 10);
    assert_eq!(v["hits"][35], 291);
}

#[test]
fn prime_chain_ends_919_991() {
    let o = run(&["search", "prime-chain", "--count", "20", "--format", "csv"]);
    let text = stdout(&o);
    let ps: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ps.len(), 20);
    assert_eq!(&ps[18..], ["919", "991"]);
}

#[test]
fn table_csv_layout() {
    let o = run(&["table", "--xs", "1,10,100"]);
    assert_eq!(stdout(&o), "n,1,10,100\nf(n),1,8,38\ng(n),1,7,37\n");
    let o = run(&["search", "table1", "--xs", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,1\nf(n),1\ng(n),1\n");
}

#[test]
fn identities_hold() {
    for args in [
        &[
            "identity", "delta", "--alpha", "2", "--beta", "1", "--degree", "12",
        ][..],
        &["identity", "lemma-3.1", "--n-max", "12"],
        &["identity", "m3-closed", "--n-max", "5"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run_in(
        dir.path(),
        &[
            "verify",
            "cor-2.2",
            "--n-max",
            "5",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["status"], "held");
}
