use std::path::Path;
use std::process::{Command, Output};

fn fforge(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fforge"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn gen_is_deterministic_and_matches_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(fforge(
        &[
            "gen",
            "--regime",
            "seven",
            "--max-hexagons",
            "4",
            "--out",
            "a.plc"
        ],
        d
    )
    .status
    .success());
    assert!(fforge(
        &[
            "gen",
            "--regime",
            "seven",
            "--max-hexagons",
            "4",
            "--out",
            "b.plc",
            "--workers",
            "2"
        ],
        d
    )
    .status
    .success());
    assert_eq!(
        std::fs::read(d.join("a.plc")).unwrap(),
        std::fs::read(d.join("b.plc")).unwrap()
    );
    assert!(
        fforge(&["oracle", "--max-hexagons", "4", "--out", "o.plc"], d)
            .status
            .success()
    );
    let diff = fforge(&["diff", "a.plc", "o.plc"], d);
    assert_eq!(diff.status.code(), Some(0));
    assert_eq!(stdout_lines(&diff).last().unwrap()["differences"], 0);
}

#[test]
fn reduce_writes_one_trace_per_map() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(fforge(
        &[
            "gen",
            "--regime",
            "ab",
            "--max-hexagons",
            "4",
            "--out",
            "f.plc"
        ],
        d
    )
    .status
    .success());
    let out = fforge(
        &["reduce", "f.plc", "--regime", "ab", "--traces", "t.jsonl"],
        d,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out).len(), 5);
    let text = std::fs::read_to_string(d.join("t.jsonl")).unwrap();
    let headers = text
        .lines()
        .filter(|l| l.contains("\"record\":\"trace\""))
        .count();
    assert_eq!(headers, 5);
}

#[test]
fn diff_and_validate_report_failures() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(
        fforge(&["oracle", "--max-hexagons", "3", "--out", "o3.plc"], d)
            .status
            .success()
    );
    assert!(fforge(
        &["nanotube", "--family", "d5", "-k", "2", "--out", "t.plc"],
        d
    )
    .status
    .success());
    assert_eq!(
        fforge(&["diff", "o3.plc", "t.plc"], d).status.code(),
        Some(1)
    );
    let recognized = stdout_lines(&fforge(&["nanotube", "t.plc"], d));
    assert_eq!(recognized[0]["family"], "D5");
    assert_eq!(recognized[0]["k"], 2);
    let report = stdout_lines(&fforge(&["validate", "t.plc"], d));
    assert_eq!(report[0]["hexagon_belts"], 2);
    assert_eq!(report[0]["class"], "F");
    let classes = stdout_lines(&fforge(&["classify", "o3.plc"], d));
    assert_eq!(classes.len(), 3);
    let belts = stdout_lines(&fforge(&["belts", "t.plc", "-k", "5"], d));
    assert_eq!(belts[0]["count"], 14);
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        fforge(&["gen", "--max-hexagons", "x", "--out", "y"], d)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fforge(
            &[
                "gen",
                "--regime",
                "nine",
                "--max-hexagons",
                "1",
                "--out",
                "y"
            ],
            d
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        fforge(&["validate", "missing.plc"], d).status.code(),
        Some(2)
    );
    assert_eq!(fforge(&["nanotube"], d).status.code(), Some(2));
    assert_eq!(fforge(&["frobnicate"], d).status.code(), Some(2));
}
