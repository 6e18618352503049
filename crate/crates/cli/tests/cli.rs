use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn mincut(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mincut"))
        .args(args)
        .current_dir(dir)
        .env_remove("MINCUT_THREADS")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

fn report_value(path: &Path) -> u64 {
    let text = fs::read_to_string(path).unwrap();
    let line = text.lines().find(|l| l.trim_start().starts_with("\"value\"")).unwrap();
    line.split(':').nth(1).unwrap().trim().trim_end_matches(',').parse().unwrap()
}

#[test]
fn planted_cut_is_found_and_reported() {
    let dir = TempDir::new().unwrap();
    let out = mincut(dir.path(), &["mincut", "--gen", "two_cliques:10,4", "--seed", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "lambda = 4\n");
    let report = fs::read_to_string(dir.path().join("mincut_report.json")).unwrap();
    assert!(report.contains("\"record\": \"cut\""));
    assert!(report.contains("\"is_singleton\": false"));

    let oracle = mincut(dir.path(), &["oracle", "--gen", "two_cliques:10,4", "--seed", "7"]);
    assert_eq!(stdout(&oracle), "lambda = 4\n");
}

#[test]
fn clique_cut_is_a_singleton() {
    let dir = TempDir::new().unwrap();
    let out = mincut(dir.path(), &["mincut", "--gen", "clique:6", "--seed", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "lambda = 5 (singleton)\n");
}

#[test]
fn certificate_of_a_tree_keeps_every_edge() {
    let dir = TempDir::new().unwrap();
    let gen = mincut(dir.path(), &["gen", "--gen", "tree:30", "--seed", "2", "--output", "g.txt"]);
    assert!(gen.status.success());
    let out = mincut(dir.path(), &["certificate", "--input", "g.txt", "--k", "2", "--output", "cert.json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "retained = 29 of 29 edges (k = 2)\n");
    let report = fs::read_to_string(dir.path().join("cert.json")).unwrap();
    assert!(report.contains("\"retained_count\": 29"));
}

#[test]
fn contract_writes_vertex_map() {
    let dir = TempDir::new().unwrap();
    let out = mincut(dir.path(), &["contract", "--gen", "two_cliques:8,3", "--output", "c.json"]);
    assert!(out.status.success());
    let report = fs::read_to_string(dir.path().join("c.json")).unwrap();
    assert!(report.contains("\"record\": \"contraction\""));
    assert!(report.contains("\"vertex_map\""));
}

#[test]
fn stats_writes_a_batch() {
    let dir = TempDir::new().unwrap();
    let out = mincut(
        dir.path(),
        &["stats", "--experiment", "components", "--gen", "disjoint_cliques:4,10", "--trials", "5"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = fs::read_to_string(dir.path().join("stats_report.json")).unwrap();
    assert!(report.contains("\"record\": \"batch\""));
    assert!(report.contains("\"trial_count\": 5"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    for sub in ["mincut", "contract"] {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let path = format!("{sub}{run}.json");
            let out = mincut(dir.path(), &[sub, "--gen", "clique_chain:3,8,3", "--seed", "9", "--output", &path]);
            assert!(out.status.success());
            outputs.push((out.stdout, fs::read(dir.path().join(&path)).unwrap()));
        }
        assert_eq!(outputs[0], outputs[1], "{sub}");
    }
    let a = mincut(dir.path(), &["gen", "--gen", "gnp:50,0.2", "--seed", "4"]);
    let b = mincut(dir.path(), &["gen", "--gen", "gnp:50,0.2", "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mincut_agrees_with_oracle_on_the_corpus() {
    let dir = TempDir::new().unwrap();
    let expected = fs::read_to_string(corpus_dir().join("expected.txt")).unwrap();
    let mut checked = 0;
    for line in expected.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (file, value) = line.split_once(' ').unwrap();
        let value: u64 = value.trim().parse().unwrap();
        let path = corpus_dir().join(file);
        let path = path.to_str().unwrap();
        let format = if file.ends_with(".dimacs") { "dimacs" } else { "edge-list" };
        for variant in ["amplified", "dense"] {
            let out = mincut(
                dir.path(),
                &["mincut", "--input", path, "--format", format, "--variant", variant, "--output", "m.json"],
            );
            assert!(out.status.success(), "{file}: {}", String::from_utf8_lossy(&out.stderr));
            assert_eq!(report_value(&dir.path().join("m.json")), value, "{file} {variant}");
        }
        let out = mincut(dir.path(), &["oracle", "--input", path, "--format", format, "--output", "o.json"]);
        assert!(out.status.success());
        assert_eq!(report_value(&dir.path().join("o.json")), value, "{file} oracle");
        checked += 1;
    }
    assert_eq!(checked, 10);
}

#[test]
fn input_errors_exit_with_status_two() {
    let dir = TempDir::new().unwrap();
    let cases: &[&[&str]] = &[
        &["mincut", "--input", "missing.txt"],
        &["mincut", "--gen", "cycle:2"],
        &["mincut", "--gen", "cycle:5", "--input", "x.txt"],
        &["mincut", "--gen", "cycle:5", "--bogus"],
        &["mincut", "--gen", "cycle:5", "--eps", "1.5"],
        &["mincut", "--gen", "cycle:5", "--seed", "-3"],
        &["mincut", "--gen", "cycle:5", "--q", "4", "--r", "9"],
        &["certificate", "--gen", "cycle:5", "--k", "0"],
        &["stats", "--experiment", "nope", "--gen", "cycle:5"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = mincut(dir.path(), args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.starts_with("error"), "{args:?}: {err}");
    }
}

#[test]
fn diagnostics_name_the_offending_flag() {
    let dir = TempDir::new().unwrap();
    let out = mincut(dir.path(), &["mincut", "--input", "missing.txt"]);
    assert!(String::from_utf8(out.stderr).unwrap().contains("--input"));
    let out = mincut(dir.path(), &["mincut", "--gen", "two_cliques:2,9"]);
    assert!(String::from_utf8(out.stderr).unwrap().contains("--gen"));
}

#[test]
fn thread_override_is_validated() {
    let dir = TempDir::new().unwrap();
    let bad = Command::new(env!("CARGO_BIN_EXE_mincut"))
        .args(["mincut", "--gen", "cycle:6"])
        .current_dir(dir.path())
        .env("MINCUT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let good = Command::new(env!("CARGO_BIN_EXE_mincut"))
        .args(["mincut", "--gen", "cycle:6"])
        .current_dir(dir.path())
        .env("MINCUT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(good.stdout).unwrap(), "lambda = 2 (singleton)\n");
}
