use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cltcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cltcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_scenario(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn list_fixtures_prints_registry() {
    let out = cltcheck(&["list-fixtures"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    for name in ["iid_rademacher", "dyadic_bounded", "bc_spikes", "iid_normal", "all_degenerate", "mixed_two_families"] {
        assert!(text.contains(name));
    }
}

#[test]
fn run_writes_all_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(
        dir.path(),
        "s.toml",
        "fixture = \"dyadic_bounded\"\nn_grid = [5, 10]\nsamples = 500\n",
    );
    let out_dir = dir.path().join("out");
    let out = cltcheck(&["run", &scenario, "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("CLT expected: no (total variance bounded)"));

    let alpha = fs::read_to_string(out_dir.join("dyadic_bounded_alpha.csv")).unwrap();
    assert!(alpha.starts_with("s,alpha_1,"));
    assert!(alpha.trim_end().ends_with("# verdict=HoldsCertified"));
    let csv = fs::read_to_string(out_dir.join("dyadic_bounded_report.csv")).unwrap();
    assert_eq!(csv.lines().next(), Some("n,B_n,lindeberg,bound,ks,m,seed"));
    assert_eq!(csv.lines().count(), 3);
    let json = fs::read_to_string(out_dir.join("dyadic_bounded_report.json")).unwrap();
    assert!(json.contains("\"schema_version\": 1"));
    let summary = fs::read_to_string(out_dir.join("dyadic_bounded_summary.txt")).unwrap();
    assert_eq!(summary, stdout);
}

#[test]
fn same_seed_same_bytes_and_seed_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(
        dir.path(),
        "s.toml",
        "fixture = \"mixed_two_families\"\nn_grid = [10, 40]\nsamples = 300\n",
    );
    let run = |sub: &str, seed: &str| {
        let out_dir = dir.path().join(sub);
        let out = cltcheck(&["--quiet", "--seed", seed, "run", &scenario, "--out", out_dir.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        (
            fs::read(out_dir.join("mixed_two_families_report.csv")).unwrap(),
            fs::read(out_dir.join("mixed_two_families_alpha.csv")).unwrap(),
        )
    };
    let a = run("a", "11");
    let b = run("b", "11");
    let c = run("c", "12");
    assert_eq!(a, b);
    assert_ne!(a.0, c.0);
    assert_eq!(a.1, c.1);
}

#[test]
fn samples_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(dir.path(), "s.toml", "fixture = \"iid_rademacher\"\nn_grid = [3]\n");
    let out_dir = dir.path().join("o");
    let out = cltcheck(&["run", &scenario, "--samples", "250", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let csv = fs::read_to_string(out_dir.join("iid_rademacher_report.csv")).unwrap();
    assert!(csv.lines().nth(1).unwrap().contains(",250,"));

    let out = cltcheck(&["run", &scenario, "--samples", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(dir.path(), "bad.toml", "fixture = \"iid_rademacher\"\neps = \n");
    let out = cltcheck(&["run", &scenario]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.toml:2:"), "{err}");

    let missing = dir.path().join("absent.toml");
    let out = cltcheck(&["run", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = cltcheck(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_fixture_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = write_scenario(dir.path(), "s.toml", "fixture = \"cauchy\"\n");
    let out = cltcheck(&["run", &scenario]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bc_spikes"), "{err}");
}

#[test]
fn runtime_failures_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("not_a_dir");
    fs::write(&blocker, "").unwrap();
    let scenario = write_scenario(
        dir.path(),
        "s.toml",
        "fixture = \"iid_rademacher\"\nn_grid = [3]\nsamples = 100\n",
    );
    let out = cltcheck(&["run", &scenario, "--out", blocker.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let numeric = clt_cli::CliError::from(clt_core::Error::UndefinedFunctional { n: 1 });
    assert_eq!(numeric.exit_code(), 4);
}
