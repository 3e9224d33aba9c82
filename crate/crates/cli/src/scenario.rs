//! Scenario documents: flat `key = value` TOML describing one study.
//!
//! ```toml
//! fixture = "iid_rademacher"
//! n_grid = [10, 100, 1000]
//! samples = 100000
//! eps = 0.5
//! seed = 20261016
//! # optional: s_grid = [0.0, 0.5, 1.0, 2.0], alpha_prefix = 100, tol = 1e-6,
//! # out_dir, alpha_csv, report_csv, report_json, summary
//! ```

use std::path::PathBuf;

use serde::Deserialize;

use clt_core::conditions::DEFAULT_TOLERANCE;
use clt_core::montecarlo::MIN_SAMPLES;

use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 20261016;
pub const DEFAULT_N_GRID: [u64; 3] = [10, 100, 1000];
pub const DEFAULT_SAMPLES: usize = 100_000;
pub const DEFAULT_EPS: f64 = 0.5;
pub const DEFAULT_ALPHA_PREFIX: u64 = 100;

/// `0` followed by 49 log-spaced points from `1e-3` to `10`.
pub fn default_s_grid() -> Vec<f64> {
    let mut grid = vec![0.0];
    grid.extend((0..49).map(|i| 1e-3 * 1e4f64.powf(i as f64 / 48.0)));
    *grid.last_mut().unwrap() = 10.0;
    grid
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub fixture: String,
    #[serde(default = "n_grid_default")]
    pub n_grid: Vec<u64>,
    #[serde(default = "samples_default")]
    pub samples: usize,
    #[serde(default = "eps_default")]
    pub eps: f64,
    #[serde(default = "default_s_grid")]
    pub s_grid: Vec<f64>,
    #[serde(default = "seed_default")]
    pub seed: u64,
    #[serde(default = "prefix_default")]
    pub alpha_prefix: u64,
    #[serde(default = "tol_default")]
    pub tol: f64,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
    #[serde(default)]
    pub alpha_csv: Option<PathBuf>,
    #[serde(default)]
    pub report_csv: Option<PathBuf>,
    #[serde(default)]
    pub report_json: Option<PathBuf>,
    #[serde(default)]
    pub summary: Option<PathBuf>,
}

fn n_grid_default() -> Vec<u64> {
    DEFAULT_N_GRID.to_vec()
}
fn samples_default() -> usize {
    DEFAULT_SAMPLES
}
fn eps_default() -> f64 {
    DEFAULT_EPS
}
fn seed_default() -> u64 {
    DEFAULT_SEED
}
fn prefix_default() -> u64 {
    DEFAULT_ALPHA_PREFIX
}
fn tol_default() -> f64 {
    DEFAULT_TOLERANCE
}

/// Output file locations after resolution against the output directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputPaths {
    pub alpha_csv: PathBuf,
    pub report_csv: PathBuf,
    pub report_json: PathBuf,
    pub summary: PathBuf,
}

/// Command-line values that take precedence over the scenario file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub out_dir: Option<PathBuf>,
    pub samples: Option<usize>,
}

impl Scenario {
    /// A scenario with every default filled in.
    pub fn with_defaults(fixture: &str) -> Self {
        Self {
            fixture: fixture.to_string(),
            n_grid: n_grid_default(),
            samples: DEFAULT_SAMPLES,
            eps: DEFAULT_EPS,
            s_grid: default_s_grid(),
            seed: DEFAULT_SEED,
            alpha_prefix: DEFAULT_ALPHA_PREFIX,
            tol: DEFAULT_TOLERANCE,
            out_dir: None,
            alpha_csv: None,
            report_csv: None,
            report_json: None,
            summary: None,
        }
    }

    /// Parse a scenario document. Errors carry the 1-based line and column.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let scenario: Scenario = toml::from_str(text).map_err(|e| {
            let (line, column) = e
                .span()
                .map(|span| line_column(text, span.start))
                .unwrap_or((1, 1));
            CliError::Parse {
                line,
                column,
                message: e.message().to_string(),
            }
        })?;
        scenario.validate(text)?;
        Ok(scenario)
    }

    pub fn apply(&mut self, overrides: &Overrides) -> Result<(), CliError> {
        if let Some(seed) = overrides.seed {
            self.seed = seed;
        }
        if let Some(dir) = &overrides.out_dir {
            self.out_dir = Some(dir.clone());
        }
        if let Some(m) = overrides.samples {
            if m < MIN_SAMPLES {
                return Err(CliError::Invalid(format!(
                    "--samples must be at least {MIN_SAMPLES}, got {m}"
                )));
            }
            self.samples = m;
        }
        Ok(())
    }

    /// Field checks that the TOML grammar cannot express. `text` is used to
    /// point at the offending key.
    pub fn validate(&self, text: &str) -> Result<(), CliError> {
        let fail = |key: &str, message: String| {
            let (line, column) = key_position(text, key);
            Err(CliError::Parse {
                line,
                column,
                message,
            })
        };
        if self.n_grid.is_empty() || self.n_grid.contains(&0) {
            return fail("n_grid", "n_grid must be a nonempty list of indices >= 1".into());
        }
        if self.samples < MIN_SAMPLES {
            return fail(
                "samples",
                format!("samples must be at least {MIN_SAMPLES}, got {}", self.samples),
            );
        }
        if !(self.eps > 0.0) || !self.eps.is_finite() {
            return fail("eps", format!("eps must be positive, got {}", self.eps));
        }
        if self.s_grid.is_empty()
            || self.s_grid.iter().any(|s| !(*s >= 0.0) || !s.is_finite())
            || self.s_grid.windows(2).any(|w| w[0] >= w[1])
        {
            return fail(
                "s_grid",
                "s_grid must be a nonempty strictly increasing list of values >= 0".into(),
            );
        }
        if self.alpha_prefix == 0 {
            return fail("alpha_prefix", "alpha_prefix must be >= 1".into());
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return fail("tol", format!("tol must be positive, got {}", self.tol));
        }
        Ok(())
    }

    pub fn outputs(&self) -> OutputPaths {
        let dir = self.out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
        let resolve = |given: &Option<PathBuf>, suffix: &str| match given {
            Some(p) if p.is_absolute() => p.clone(),
            Some(p) => dir.join(p),
            None => dir.join(format!("{}_{suffix}", self.fixture)),
        };
        OutputPaths {
            alpha_csv: resolve(&self.alpha_csv, "alpha.csv"),
            report_csv: resolve(&self.report_csv, "report.csv"),
            report_json: resolve(&self.report_json, "report.json"),
            summary: resolve(&self.summary, "summary.txt"),
        }
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn key_position(text: &str, key: &str) -> (usize, usize) {
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix(key) {
            if rest.trim_start().starts_with('=') {
                return (i + 1, line.len() - trimmed.len() + 1);
            }
        }
    }
    (1, 1)
}
