use std::process::{Command, Output};

fn ucphase(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ucphase"))
        .args(args)
        .env("UCPHASE_CACHE_DIR", cache)
        .env_remove("UCPHASE_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_uc_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = ucphase(&["compute-uc", "--lambda", "1", "--mu", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x1*y1 - 1");

    let o = ucphase(&["compute-uc", "--lambda", "", "--mu", ""], dir.path());
    assert_eq!(stdout(&o).trim(), "1");

    let o = ucphase(&["compute-uc", "--lambda", "2,3"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = ucphase(&["compute-uc", "--lambda", "a"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compute_uc_json_round_trips_and_is_cached() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["compute-uc", "--lambda", "2,1", "--mu", "1", "--format", "json"];
    let first = ucphase(&args, dir.path());
    let second = ucphase(&args, dir.path());
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["lambda"], "2,1");
    let stats = ucphase(&["cache", "stats"], dir.path());
    assert!(stdout(&stats).starts_with("1 entries"), "{}", stdout(&stats));
    let cleared = ucphase(&["cache", "clear"], dir.path());
    assert!(stdout(&cleared).starts_with("removed 1 entries"));
    assert!(stdout(&ucphase(&["cache", "stats"], dir.path())).starts_with("0 entries"));
}

#[test]
fn verify_exit_codes_and_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let o = ucphase(&["verify", "jacobi-trudi", "--max-weight", "4"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "jacobi-trudi");
    assert_eq!(v["pass"], true);
    assert_eq!(v["params"]["max_weight"], 4);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 144);
    assert!(cases.iter().all(|c| c["pass"] == true && c.get("input").is_some() && c.get("residual").is_none()));

    let o = ucphase(&["verify", "rtt", "--m1", "1", "--m2", "1", "--cap", "2"], dir.path());
    assert_eq!(o.status.code(), Some(0));

    let o = ucphase(&["verify", "bogus"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = ucphase(&["--jobs", "1", "verify", "annihilation", "--cap", "2"], dir.path());
    let b = ucphase(&["--jobs", "4", "verify", "annihilation", "--cap", "2"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn macmahon_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = ucphase(&["macmahon", "--order", "6", "--method", "product"], dir.path());
    assert_eq!(stdout(&o).trim(), "1,1,3,6,13,24,48");
    let o = ucphase(&["macmahon", "--order", "4", "--compare"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all methods agree"));
    let o = ucphase(&["macmahon", "--order", "40", "--method", "enumerate"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = ucphase(&["macmahon", "--order", "5", "--method", "correlator", "--format", "json"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!([1, 1, 3, 6, 13, 24]));
}

#[test]
fn config_file_sits_under_explicit_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# suite sizes\nmax-weight = 1\norder=3\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let o = ucphase(&["--config", cfg, "verify", "jacobi-trudi"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["max_weight"], 1);
    let o = ucphase(&["--config", cfg, "verify", "jacobi-trudi", "--max-weight", "2"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["max_weight"], 2);
    let o = ucphase(&["--config", cfg, "macmahon"], dir.path());
    assert_eq!(stdout(&o).trim(), "1,1,3,6");

    std::fs::write(dir.path().join("bad.conf"), "colour=red\n").unwrap();
    let bad = dir.path().join("bad.conf");
    let o = ucphase(&["--config", bad.to_str().unwrap(), "macmahon"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bethe_single_root() {
    let dir = tempfile::tempdir().unwrap();
    let o = ucphase(&["bethe", "--u", "2", "--m1", "1", "--m2", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.trim_end().ends_with("= 4*x1*y1 + x1 + y1 - 15/4"), "{text}");
}
