//! Reproducible Monte Carlo simulation of normalized sums.

mod eta;
mod ks;
mod rng;
mod study;

pub use eta::{binomial_standard_error, estimate_eta_tail, eta_cauchy_bound, MIN_ETA_SAMPLES};
pub use ks::{ks_distance_to_normal, ks_statistic};
pub use rng::{row_seed, study_id, RngStream, StreamKey};
pub use study::{
    convergence_study, sample_normalized_sum, ConvergenceReport, NormalizedSumSampler, ReportRow,
    Verdicts, DOMINATION_SLACK, MIN_SAMPLES, SCHEMA_VERSION,
};
