//! Cauchy-in-probability diagnostics for `η_k = (ξ_2 + ⋯ + ξ_k) / B_k`.

use rayon::prelude::*;

use super::rng::{study_id, RngStream, StreamKey};
use crate::error::{domain, Error, Result};
use crate::sequences::{stats_of, RandomSequence};

pub const MIN_ETA_SAMPLES: usize = 1000;

/// Chebyshev bound on `P(|η_l − η_n| > ε)` for `0 < B_n ≤ B_l`:
///
/// ```text
/// (1/B_l − 1/B_n)² · 4 B_n² / ε²  +  4 (B_l² − B_n²) / (B_l² ε²)
/// ```
///
/// The value is returned as is and may exceed 1.
pub fn eta_cauchy_bound(b_n: f64, b_l: f64, eps: f64) -> Result<f64> {
    if !(b_n > 0.0) || !(b_l >= b_n) || !b_l.is_finite() {
        return Err(domain(format!("need 0 < B_n <= B_l, got B_n = {b_n}, B_l = {b_l}")));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(domain(format!("eps must be > 0, got {eps}")));
    }
    let e2 = eps * eps;
    let gap = 1.0 / b_l - 1.0 / b_n;
    Ok(gap * gap * 4.0 * b_n * b_n / e2 + 4.0 * (b_l * b_l - b_n * b_n) / (b_l * b_l * e2))
}

/// Monte Carlo estimate of `P(|η_l − η_n| > ε)`, drawing `ξ_2, …, ξ_l` once
/// per replicate and using them for both `η_n` and `η_l`.
///
/// Terms are centered at their means. `l = n` gives exactly 0.
pub fn estimate_eta_tail(
    seq: &RandomSequence,
    n: u64,
    l: u64,
    eps: f64,
    m: usize,
    root_seed: u64,
) -> Result<f64> {
    if n < 2 || l < n {
        return Err(domain(format!("need 2 <= n <= l, got n = {n}, l = {l}")));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(domain(format!("eps must be > 0, got {eps}")));
    }
    if m < MIN_ETA_SAMPLES {
        return Err(domain(format!("need at least {MIN_ETA_SAMPLES} samples, got {m}")));
    }
    let terms = seq.terms(l)?;
    let b_n = stats_of(n, &terms[..n as usize]).total_std_dev();
    let b_l = stats_of(l, &terms).total_std_dev();
    if b_n <= 0.0 {
        return Err(Error::DegenerateNormalization { n });
    }
    if l == n {
        return Ok(0.0);
    }

    let study = study_id(&format!("{}/eta/{l}", seq.name()));
    let head = &terms[1..n as usize];
    let tail = &terms[n as usize..];
    let exceed = (0..m as u64)
        .into_par_iter()
        .filter(|&replicate| {
            let mut rng = RngStream::new(root_seed, StreamKey { study, n, replicate });
            let partial: f64 = head.iter().map(|d| d.sample(&mut rng) - d.mean()).sum();
            let rest: f64 = tail.iter().map(|d| d.sample(&mut rng) - d.mean()).sum();
            ((partial + rest) / b_l - partial / b_n).abs() > eps
        })
        .count();
    Ok(exceed as f64 / m as f64)
}

/// Standard error of a binomial proportion estimate.
pub fn binomial_standard_error(p: f64, m: usize) -> f64 {
    (p * (1.0 - p) / m as f64).sqrt()
}
