use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clt_core::montecarlo::{convergence_study, ConvergenceReport, Verdicts};
use clt_core::{
    check_uniform_convergence, classify_singularity, fixture, AlphaProfile, Singularity,
    FIXTURES,
};

use crate::error::CliError;
use crate::scenario::{OutputPaths, Overrides, Scenario};
use crate::verdict::{clt_expectation, Expectation, VarianceTrend};

/// Everything a scenario run produces, before anything is written.
#[derive(Debug, Clone)]
pub struct StudyOutcome {
    pub scenario: Scenario,
    pub singularity: Singularity,
    pub profile: AlphaProfile,
    pub report: ConvergenceReport,
    pub trend: VarianceTrend,
    pub expectation: Expectation,
    pub summary: String,
}

/// Condition checks and the Monte Carlo study for a validated scenario.
pub fn execute(scenario: &Scenario) -> Result<StudyOutcome, CliError> {
    let seq = fixture(&scenario.fixture)?;
    let max_n = scenario.n_grid.iter().copied().max().unwrap_or(1);
    let singularity = classify_singularity(&seq, max_n.max(scenario.alpha_prefix))?;
    let profile =
        check_uniform_convergence(&seq, &scenario.s_grid, scenario.alpha_prefix, scenario.tol)?;
    let trend = VarianceTrend::from(seq.variance_growth());
    let expectation = clt_expectation(singularity, profile.verdict, trend);
    let report = convergence_study(
        &seq,
        &scenario.n_grid,
        scenario.samples,
        scenario.eps,
        scenario.seed,
    )?
    .with_verdicts(Verdicts {
        singularity,
        uniform_convergence: profile.verdict,
    });
    let summary = summarize(scenario, singularity, &profile, trend, expectation, &report);
    Ok(StudyOutcome {
        scenario: scenario.clone(),
        singularity,
        profile,
        report,
        trend,
        expectation,
        summary,
    })
}

fn join<T, F: Fn(&T) -> String>(xs: &[T], f: F) -> String {
    xs.iter().map(f).collect::<Vec<_>>().join(", ")
}

fn trend_word(values: &[f64]) -> &'static str {
    if values.len() < 2 {
        "single row"
    } else if values.windows(2).all(|w| w[1] <= w[0]) {
        "nonincreasing"
    } else if values.windows(2).all(|w| w[1] >= w[0]) {
        "nondecreasing"
    } else {
        "not monotone"
    }
}

fn summarize(
    scenario: &Scenario,
    singularity: Singularity,
    profile: &AlphaProfile,
    trend: VarianceTrend,
    expectation: Expectation,
    report: &ConvergenceReport,
) -> String {
    let rows: Vec<_> = report.sampled_rows().collect();
    let ks: Vec<f64> = rows.iter().filter_map(|r| r.ks).collect();
    let mut s = String::new();
    let _ = writeln!(s, "fixture: {}", scenario.fixture);
    let _ = writeln!(
        s,
        "seed: {}  samples per n: {}  eps: {}",
        scenario.seed, scenario.samples, scenario.eps
    );
    let _ = writeln!(s, "singularity: {singularity}");
    let _ = writeln!(
        s,
        "uniform convergence: {} ({})",
        profile.verdict, profile.evidence
    );
    let _ = writeln!(
        s,
        "total variance B_n^2 at n = {}: {}",
        join(&report.rows, |r| r.n.to_string()),
        join(&report.rows, |r| format!("{}", r.b_n * r.b_n))
    );
    let _ = writeln!(s, "total variance trend: {trend}");
    if rows.is_empty() {
        let _ = writeln!(s, "KS distance to N(0,1): not defined (B_n = 0 on every row)");
    } else {
        let _ = writeln!(
            s,
            "Lindeberg L_n(eps): {}",
            join(&rows, |r| format!("{:.6}", r.lindeberg.unwrap()))
        );
        let _ = writeln!(
            s,
            "KS distance to N(0,1): {} ({})",
            join(&ks, |d| format!("{d:.5}")),
            trend_word(&ks)
        );
    }
    let _ = writeln!(s, "CLT expected: {expectation}");
    s
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    let err = |source| CliError::Write {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(err)?;
    }
    fs::write(path, contents).map_err(err)
}

pub fn write_artifacts(outcome: &StudyOutcome, paths: &OutputPaths) -> Result<(), CliError> {
    write(&paths.alpha_csv, &outcome.profile.to_csv())?;
    write(&paths.report_csv, &outcome.report.to_csv())?;
    write(&paths.report_json, &outcome.report.to_json())?;
    write(&paths.summary, &outcome.summary)
}

/// Read, validate, run and write one scenario file.
pub fn run_scenario(path: &Path, overrides: &Overrides) -> Result<StudyOutcome, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let mut scenario = Scenario::parse(&text)?;
    scenario.apply(overrides)?;
    // Resolve the fixture before any work so an unknown name exits with its own code.
    fixture(&scenario.fixture)?;
    let outcome = execute(&scenario)?;
    write_artifacts(&outcome, &scenario.outputs())?;
    Ok(outcome)
}

/// Registry names with one-line descriptions, one fixture per row.
pub fn list_fixtures() -> String {
    let width = FIXTURES.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    FIXTURES
        .iter()
        .map(|(name, about)| format!("{name:<width$}  {about}\n"))
        .collect()
}
