//! End-to-end runs of the `bingo` binary.

use std::path::Path;
use std::process::{Command, Output};

fn bingo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bingo"))
        .args(args)
        .env_remove("BINGO_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn exact_classic_card_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = bingo(&["exact", "--n", "5", "--m", "15", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = json(&dir.path().join("summary.json"));
    let s = summary["s"]["decimal"].as_str().unwrap();
    assert_eq!(s.len(), 32);
    assert_eq!(format!("{:.8}", s.parse::<f64>().unwrap()), "0.45567666");
    assert_eq!(summary["expectation_closed_form"], summary["expectation_by_sum"]);
    assert!(summary["expectation_closed_form"]["decimal"].as_str().unwrap().starts_with("41.368"));
    let profile = json(&dir.path().join("profile.json"));
    assert_eq!(profile["universe"], 25);
}

#[test]
fn exact_distribution_csv_endpoints() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = bingo(&["exact", "--n", "3", "--m", "3", "--free-space=false", "--out", d]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("distribution.csv")).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[2], ["2", "0", "0"]);
    assert_eq!(rows[3][1], "0.0952380952381");
    assert_eq!(rows[9][..2], ["9", "1"]);
}

#[test]
fn exit_codes() {
    let out = bingo(&["exact", "--n", "4", "--m", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
    let out = bingo(&["exact", "--n"]);
    assert_eq!(out.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let out = bingo(&[
        "multiplayer", "--n", "3", "--m", "9", "--players", "4", "--mode", "exact",
        "--limit", "20", "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("simulate"));
    assert!(bingo(&["--help"]).status.success());
}

#[test]
fn single_player_reproduces_exact() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert!(bingo(&["exact", "--n", "5", "--m", "7", "--out", a.path().to_str().unwrap()]).status.success());
    let out = bingo(&[
        "multiplayer", "--n", "5", "--m", "7", "--players", "1", "--mode", "exact",
        "--seed", "3", "--out", b.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary = json(&a.path().join("summary.json"));
    let report = json(&b.path().join("report.json"));
    assert_eq!(report["exact"]["expectation"], summary["expectation_closed_form"]);
    let cards = json(&b.path().join("cards.json"));
    assert_eq!(cards["master_seed"], 3);
    assert_eq!(cards["cards"].as_array().unwrap().len(), 1);
}

#[test]
fn validate_mode_is_reproducible() {
    let run = |workers: &str| {
        let dir = tempfile::tempdir().unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_bingo"))
            .args([
                "multiplayer", "--n", "3", "--m", "5", "--players", "2", "--seed", "42",
                "--trials", "100000", "--free-space=false", "--out", dir.path().to_str().unwrap(),
            ])
            .env("BINGO_WORKERS", workers)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        (
            std::fs::read(dir.path().join("report.json")).unwrap(),
            std::fs::read(dir.path().join("cards.json")).unwrap(),
        )
    };
    let (report, cards) = run("1");
    assert_eq!(run("4"), (report.clone(), cards));
    let report: serde_json::Value = serde_json::from_slice(&report).unwrap();
    assert!(report["relative_error"].as_f64().unwrap() < 0.003);
    assert_eq!(report["within_4se"], true);
    assert_eq!(report["simulation"]["trials"], 100000);
}

#[test]
fn sweep_is_affine() {
    let out = bingo(&["sweep", "--n", "5", "--m-min", "5", "--m-max", "30"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# affine=true"));
    assert!(text.contains("# slope=2.72161"));
    let steps: Vec<&str> = text
        .lines()
        .skip(2)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(steps.len(), 25);
    assert!(steps.windows(2).all(|w| w[0] == w[1]));
    let out = bingo(&["sweep", "--n", "5", "--m-min", "3", "--m-max", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reliability_grid_and_footer() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rel.csv");
    let out = bingo(&["reliability", "--n", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[1], "0,0,1");
    assert_eq!(lines[10_000], "1,1,0");
    let diff: f64 = lines
        .iter()
        .find_map(|l| l.strip_prefix("# difference="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(diff.abs() < 1e-6);
}

#[test]
fn corners_family() {
    let dir = tempfile::tempdir().unwrap();
    let out = bingo(&["exact", "--n", "5", "--m", "15", "--family", "corners", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let summary = json(&dir.path().join("summary.json"));
    // one 4-number pattern: E = 76 * 4/5
    assert_eq!(summary["expectation_closed_form"]["fraction"], "304/5");
}

#[test]
fn eleven_by_eleven_within_budget() {
    let dir = tempfile::tempdir().unwrap();
    let start = std::time::Instant::now();
    let out = bingo(&["exact", "--n", "11", "--m", "11", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(start.elapsed() < std::time::Duration::from_secs(60));
    let summary = json(&dir.path().join("summary.json"));
    assert!(summary["s"]["decimal"].as_str().unwrap().starts_with("0.284719"));
}
