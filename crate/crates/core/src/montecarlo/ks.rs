use crate::error::{domain, Result};
use crate::normal;

/// Exact one-sample Kolmogorov–Smirnov statistic `sup_x |F_m(x) − F(x)|`.
///
/// With the sample sorted ascending this is
/// `max_i max(i/m − F(x_i), F(x_i) − (i − 1)/m)`; ties are handled
/// correctly because the first and last index of a tie group dominate.
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<f64> {
    if samples.is_empty() {
        return Err(domain("KS statistic needs at least one sample"));
    }
    if samples.iter().any(|x| x.is_nan()) {
        return Err(domain("samples contain NaN"));
    }
    let mut xs = samples.to_vec();
    xs.sort_unstable_by(f64::total_cmp);
    let m = xs.len() as f64;
    let d = xs.iter().enumerate().fold(0.0f64, |acc, (i, &x)| {
        let f = cdf(x);
        let above = (i + 1) as f64 / m - f;
        let below = f - i as f64 / m;
        acc.max(above).max(below)
    });
    Ok(d.clamp(0.0, 1.0))
}

/// KS distance between the empirical law of `samples` and `N(0, 1)`.
pub fn ks_distance_to_normal(samples: &[f64]) -> Result<f64> {
    ks_statistic(samples, normal::cdf)
}
