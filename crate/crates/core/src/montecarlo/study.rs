//! Convergence studies of normalized sums.

use rayon::prelude::*;
use serde::Serialize;

use super::ks::ks_distance_to_normal;
use super::rng::{row_seed, study_id, RngStream, StreamKey};
use crate::conditions::{bound_from_terms, lindeberg_from_terms, LindebergBound, Singularity, UniformConvergence};
use crate::distributions::Distribution;
use crate::error::{domain, Error, Result};
use crate::sequences::{stats_of, RandomSequence};

pub const SCHEMA_VERSION: u32 = 1;

/// Minimum number of replicates per row.
pub const MIN_SAMPLES: usize = 100;

/// Slack allowed in `L_n(ε) ≤ sup_k α_k(ε B_n)` for rounding.
pub const DOMINATION_SLACK: f64 = 1e-12;

/// Draws `S̃_n = (S_n − E S_n) / B_n` for a fixed prefix.
#[derive(Debug, Clone)]
pub struct NormalizedSumSampler {
    terms: Vec<Distribution>,
    total_std_dev: f64,
}

impl NormalizedSumSampler {
    pub fn new(seq: &RandomSequence, n: u64) -> Result<Self> {
        Self::from_terms(seq.terms(n)?)
    }

    fn from_terms(terms: Vec<Distribution>) -> Result<Self> {
        let stats = stats_of(terms.len() as u64, &terms);
        if stats.total_variance <= 0.0 {
            return Err(Error::DegenerateNormalization { n: stats.n });
        }
        Ok(Self {
            terms,
            total_std_dev: stats.total_std_dev(),
        })
    }

    pub fn total_std_dev(&self) -> f64 {
        self.total_std_dev
    }

    pub fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let centered: f64 = self.terms.iter().map(|d| d.sample(rng) - d.mean()).sum();
        centered / self.total_std_dev
    }
}

/// One draw of `S̃_n` from `stream`.
pub fn sample_normalized_sum(seq: &RandomSequence, n: u64, stream: &mut RngStream) -> Result<f64> {
    Ok(NormalizedSumSampler::new(seq, n)?.sample(stream))
}

/// Verdicts attached to a report by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Verdicts {
    pub singularity: Singularity,
    pub uniform_convergence: UniformConvergence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub n: u64,
    #[serde(rename = "B_n")]
    pub b_n: f64,
    /// `None` when `B_n = 0`.
    pub lindeberg: Option<f64>,
    pub bound: Option<LindebergBound>,
    pub ks: Option<f64>,
    /// Sample variance of the `S̃_n` draws; 1 in expectation.
    pub sample_variance: Option<f64>,
    /// Replicates actually drawn (0 for degenerate rows).
    pub m: usize,
    pub seed: u64,
}

impl ReportRow {
    pub fn is_degenerate(&self) -> bool {
        self.lindeberg.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub schema_version: u32,
    pub fixture: String,
    pub eps: f64,
    pub n_grid: Vec<u64>,
    pub samples: usize,
    pub root_seed: u64,
    pub verdicts: Option<Verdicts>,
    pub rows: Vec<ReportRow>,
}

pub fn convergence_study(
    seq: &RandomSequence,
    n_grid: &[u64],
    m: usize,
    eps: f64,
    root_seed: u64,
) -> Result<ConvergenceReport> {
    if m < MIN_SAMPLES {
        return Err(domain(format!("need at least {MIN_SAMPLES} samples per row, got {m}")));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(domain(format!("eps must be > 0, got {eps}")));
    }
    if n_grid.is_empty() || n_grid.contains(&0) {
        return Err(domain("n grid must be nonempty with entries >= 1"));
    }
    let study = study_id(seq.name());
    let rows = n_grid
        .iter()
        .map(|&n| study_row(seq, study, n, m, eps, root_seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport {
        schema_version: SCHEMA_VERSION,
        fixture: seq.name().to_string(),
        eps,
        n_grid: n_grid.to_vec(),
        samples: m,
        root_seed,
        verdicts: None,
        rows,
    })
}

fn study_row(
    seq: &RandomSequence,
    study: u64,
    n: u64,
    m: usize,
    eps: f64,
    root_seed: u64,
) -> Result<ReportRow> {
    let terms = seq.terms(n)?;
    let stats = stats_of(n, &terms);
    let seed = row_seed(root_seed, study, n);
    if stats.total_variance <= 0.0 {
        return Ok(ReportRow {
            n,
            b_n: 0.0,
            lindeberg: None,
            bound: None,
            ks: None,
            sample_variance: None,
            m: 0,
            seed,
        });
    }
    let lindeberg = lindeberg_from_terms(&terms, &stats, eps)?;
    let bound = bound_from_terms(seq, &terms, &stats, eps)?;
    if lindeberg > bound.prefix_sup + DOMINATION_SLACK {
        return Err(Error::Invariant(format!(
            "{}: L_{n}({eps}) = {lindeberg} exceeds sup_k alpha_k = {}",
            seq.name(),
            bound.prefix_sup
        )));
    }

    let sampler = NormalizedSumSampler::from_terms(terms)?;
    let draws: Vec<f64> = (0..m as u64)
        .into_par_iter()
        .map(|replicate| {
            let mut stream = RngStream::new(root_seed, StreamKey { study, n, replicate });
            sampler.sample(&mut stream)
        })
        .collect();
    let ks = ks_distance_to_normal(&draws)?;

    Ok(ReportRow {
        n,
        b_n: stats.total_std_dev(),
        lindeberg: Some(lindeberg),
        bound: Some(bound),
        ks: Some(ks),
        sample_variance: Some(sample_variance(&draws)),
        m,
        seed,
    })
}

fn sample_variance(xs: &[f64]) -> f64 {
    let m = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / m;
    xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (m - 1.0)
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl ConvergenceReport {
    pub fn with_verdicts(mut self, verdicts: Verdicts) -> Self {
        self.verdicts = Some(verdicts);
        self
    }

    /// Rows with `B_n > 0`.
    pub fn sampled_rows(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.is_degenerate())
    }

    /// CSV with header `n,B_n,lindeberg,bound,ks,m,seed`. Fields that are
    /// undefined for degenerate rows are left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,B_n,lindeberg,bound,ks,m,seed\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.n,
                r.b_n,
                opt(r.lindeberg),
                opt(r.bound.map(|b| b.value())),
                opt(r.ks),
                r.m,
                r.seed
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
