use std::fs;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_see-bandit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn run_writes_summary_and_trials() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("summary.csv");
    let per = dir.path().join("trials.csv");
    stdout(&[
        "run",
        "--family",
        "UniqueQualified",
        "--K",
        "4",
        "--delta",
        "0.1",
        "--trials",
        "3",
        "--seed",
        "7",
        "--out",
        out.to_str().unwrap(),
        "--per-trial",
        per.to_str().unwrap(),
    ]);
    let summary = fs::read_to_string(&out).unwrap();
    let mut lines = summary.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,K,delta,algo,trials,mean_pulls,se_pulls,error_count,forced_stop_count"
    );
    assert!(lines
        .next()
        .unwrap()
        .starts_with("UniqueQualified,4,0.1,see,3,"));
    assert_eq!(fs::read_to_string(&per).unwrap().lines().count(), 4);
}

#[test]
fn sweep_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("grid.txt");
    fs::write(
        &spec,
        "families = AllWorse, AllGood\nK = 3\ndeltas = 0.1\nalgos = see, hdoc\ntrials = 2\nseed = 1\n",
    )
    .unwrap();
    let out = dir.path().join("s.csv");
    stdout(&[
        "sweep",
        "--spec",
        spec.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("AllGood,3,0.1,hdoc,2,"));
}

#[test]
fn hardness_row() {
    let text = stdout(&["hardness", "--family", "AllWorse", "--K", "10"]);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,K,h,h1,h0,h1_neg,h1_low,h1_pos,h1_bai"
    );
    let row: Vec<_> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "AllWorse");
    assert_eq!(row[5].parse::<f64>().unwrap(), 320.0);
}

#[test]
fn bounds_row() {
    let text = stdout(&[
        "bounds", "--family", "AllWorse", "--K", "10", "--delta", "0.01",
    ]);
    let header: Vec<_> = text.lines().next().unwrap().split(',').collect();
    let row: Vec<_> = text.lines().nth(1).unwrap().split(',').collect();
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    let neg: f64 = col("lower_bound_negative").parse().unwrap();
    assert!((neg - 1441.0296).abs() < 1e-3);
    assert_eq!(col("lower_bound_positive_delta"), "");
}

#[test]
fn conc_test_row() {
    let text = stdout(&[
        "conc-test",
        "--delta",
        "0.1",
        "--horizon",
        "256",
        "--sequences",
        "200",
        "--sigma",
        "0",
    ]);
    assert_eq!(text.lines().nth(1).unwrap().split(',').nth(3), Some("0"));
}

#[test]
fn bad_input_fails() {
    assert!(!bin(&["hardness", "--family", "Linear", "--K", "1"])
        .status
        .success());
    assert!(!bin(&[
        "conc-test",
        "--delta",
        "2",
        "--horizon",
        "8",
        "--sequences",
        "1"
    ])
    .status
    .success());
    let out = bin(&[
        "run",
        "--family",
        "Nope",
        "--K",
        "3",
        "--delta",
        "0.1",
        "--out",
        "/dev/null",
    ]);
    assert!(!out.status.success());
}
