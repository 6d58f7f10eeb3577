use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn mclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mclab"))
        .args(args)
        .env_remove("MCLAB_WORKERS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_matches_goldens() {
    for name in ["p3", "k4", "k4_minus_edge", "c4"] {
        let graph = fixture(&format!("{name}.txt"));
        let out = mclab(&["analyze", path_str(&graph), "--exact-cap", "12"]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        assert_eq!(stdout(&out), golden(&format!("analyze_{name}.txt")), "{name}");
    }
}

#[test]
fn analyze_key_values() {
    let out = mclab(&["analyze", path_str(&fixture("k4_minus_edge.txt")), "--no-search"]);
    let text = stdout(&out);
    assert!(text.contains("lower: 3\n") && text.contains("upper: 4\n") && text.contains("exact: unknown\n"));
}

#[test]
fn gen_matches_goldens_and_is_deterministic() {
    let cases: [(&[&str], &str); 3] = [
        (&["--n", "5", "--p", "1", "--seed", "1"], "gen_k5.txt"),
        (&["--n", "8", "--p", "0.4", "--seed", "7"], "gen_n8_p04_seed7.txt"),
        (
            &["--n", "300", "--p", "0.02", "--seed", "7", "--stream", "3"],
            "gen_n300_sparse.txt",
        ),
    ];
    for (args, file) in cases {
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        let a = mclab(&full);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(stdout(&a), golden(file));
        assert_eq!(stdout(&mclab(&full)), stdout(&a));
    }
    let empty = mclab(&["gen", "--n", "5", "--p", "0", "--seed", "3"]);
    assert_eq!(stdout(&empty), "5 0\n");
}

#[test]
fn gen_writes_files_and_requires_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let out = mclab(&["gen", "--n", "5", "--p", "1", "--seed", "1", "--out", path_str(&path)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("gen_k5.txt"));

    let missing = mclab(&["gen", "--n", "5", "--p", "0.5"]);
    assert_eq!(missing.status.code(), Some(2));

    let bad = dir.path().join("no/such/dir/g.txt");
    let out = mclab(&["gen", "--n", "5", "--p", "1", "--seed", "1", "--out", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot write"), "{}", stderr(&out));
}

#[test]
fn verify_exit_codes() {
    let c4 = fixture("c4.txt");
    let out = mclab(&["verify", path_str(&c4), path_str(&fixture("c4_distinct.txt"))]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), golden("verify_c4_distinct.txt"));

    let out = mclab(&["verify", path_str(&c4), path_str(&fixture("c4_short.txt"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("3 labels but graph has 4 edges"));

    let out = mclab(&["verify", path_str(&c4), path_str(&fixture("missing.txt"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn color_then_verify_round_trip() {
    let out = mclab(&["color", path_str(&fixture("k4.txt"))]);
    assert_eq!(stdout(&out), golden("color_k4.txt"));

    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let coloring = dir.path().join("c.txt");
    mclab(&[
        "gen",
        "--n",
        "40",
        "--p",
        "0.3",
        "--seed",
        "5",
        "--out",
        path_str(&graph),
    ]);
    let out = mclab(&["color", path_str(&graph), "--out", path_str(&coloring)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = mclab(&["verify", path_str(&graph), path_str(&coloring)]);
    assert_eq!(out.status.code(), Some(0));
    let g = mclab::io::read_edge_list(&graph).unwrap();
    assert_eq!(stdout(&out), format!("valid: {} colors\n", g.m() + 2 - g.n()));
}

#[test]
fn threshold_matches_goldens() {
    let out = mclab(&["threshold", "--family", "nlogn", "--param", "1", "--n", "1000"]);
    assert_eq!(stdout(&out), golden("threshold_dense_1000.txt"));
    assert!(stdout(&out).contains("p: 0.00884040\n"));
    let out = mclab(&["threshold", "--family", "power", "--param", "0.5", "--n", "10000"]);
    assert_eq!(stdout(&out), golden("threshold_sparse_10000.txt"));
    assert!(stdout(&out).contains("p: 0.000921034\n"));
}

#[test]
fn threshold_domain_and_spec_errors() {
    let out = mclab(&["threshold", "--family", "nlogn", "--param", "1", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("below formula domain"));
    let out = mclab(&["threshold", "--family", "power", "--param", "1.5", "--n", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mclab(&["threshold", "--family", "bogus", "--n", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

fn run_sweep(dir: &Path, csv: &str, workers: Option<&str>) -> (Output, PathBuf) {
    let out_path = dir.join(csv);
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mclab"));
    cmd.args([
        "sweep",
        path_str(&fixture("small_sweep.conf")),
        "--output",
        path_str(&out_path),
    ]);
    match workers {
        Some(w) => cmd.env("MCLAB_WORKERS", w),
        None => cmd.env_remove("MCLAB_WORKERS"),
    };
    (cmd.output().unwrap(), out_path)
}

#[test]
fn sweep_matches_golden_for_any_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let (out, csv) = run_sweep(dir.path(), "one.csv", None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), golden("sweep_small.csv"));

    let (out, csv4) = run_sweep(dir.path(), "four.csv", Some("4"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&csv4).unwrap(), std::fs::read(&csv).unwrap());

    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("one.json")).unwrap()).unwrap();
    assert_eq!(sidecar["master_seed"], 42);
    assert!(sidecar["config"].as_str().unwrap().contains("n_list = 100,200"));
    assert_eq!(sidecar["report"]["rows"].as_array().unwrap().len(), 4);
    assert_eq!(sidecar["report"]["failed"].as_array().unwrap().len(), 0);
}

#[test]
fn sweep_rejects_bad_configs() {
    let out = mclab(&["sweep", path_str(&fixture("bad_trials.conf"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("`trials`"), "{}", stderr(&out));

    let dir = tempfile::tempdir().unwrap();
    let (out, _) = run_sweep(dir.path(), "x.csv", Some("0"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("`workers`"), "{}", stderr(&out));
}
