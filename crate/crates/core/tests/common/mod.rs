//! Independent oracles used by the integration tests. Nothing here calls the
//! closed forms under test.
#![allow(dead_code)]

use clt_core::{Distribution, Kind};

/// Adaptive Simpson quadrature with Richardson correction.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    // Start from a fixed panel split so narrow features are not missed.
    let panels = 64;
    let h = (b - a) / panels as f64;
    let coarse: f64 = (0..panels)
        .map(|i| {
            let (x0, x1) = (a + i as f64 * h, a + (i + 1) as f64 * h);
            let xm = 0.5 * (x0 + x1);
            (x1 - x0) / 6.0 * (f(x0) + 4.0 * f(xm) + f(x1))
        })
        .sum();
    let tol = rel_tol * coarse.abs().max(1e-300);
    (0..panels)
        .map(|i| {
            let (x0, x1) = (a + i as f64 * h, a + (i + 1) as f64 * h);
            let xm = 0.5 * (x0 + x1);
            let (f0, fm, f1) = (f(x0), f(xm), f(x1));
            let whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
            simpson(f, x0, x1, f0, fm, f1, whole, tol / panels as f64, 60)
        })
        .sum()
}

#[allow(clippy::too_many_arguments)]
fn simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Atoms `(location, probability)` of a discrete law.
pub fn atoms(d: &Distribution) -> Option<Vec<(f64, f64)>> {
    match d.kind() {
        Kind::Degenerate { value } => Some(vec![(value, 1.0)]),
        Kind::TwoPoint { center, offset } => {
            Some(vec![(center - offset, 0.5), (center + offset, 0.5)])
        }
        Kind::ThreePoint {
            center,
            offset,
            spike_probability: p,
        } => Some(vec![
            (center - offset, 0.5 * p),
            (center, 1.0 - p),
            (center + offset, 0.5 * p),
        ]),
        _ => None,
    }
}

/// Density and integration window `[lo, hi]` of a continuous law, written
/// out from the textbook definitions.
pub fn density(d: &Distribution) -> Option<(Box<dyn Fn(f64) -> f64>, f64, f64)> {
    match d.kind() {
        Kind::Normal { mean, variance } => {
            let sd = variance.sqrt();
            Some((
                Box::new(move |x: f64| {
                    let z = (x - mean) / sd;
                    (-0.5 * z * z).exp() / (sd * (2.0 * std::f64::consts::PI).sqrt())
                }),
                mean - 40.0 * sd,
                mean + 40.0 * sd,
            ))
        }
        Kind::Uniform { low, high } => Some((Box::new(move |_| 1.0 / (high - low)), low, high)),
        Kind::Exponential { rate } => Some((
            Box::new(move |x: f64| rate * (-rate * x).exp()),
            0.0,
            800.0 / rate,
        )),
        _ => None,
    }
}

/// Oracle mean and variance: enumeration or quadrature.
pub fn moments(d: &Distribution) -> (f64, f64) {
    if let Some(at) = atoms(d) {
        let mean: f64 = at.iter().map(|(x, p)| x * p).sum();
        let var: f64 = at.iter().map(|(x, p)| (x - mean).powi(2) * p).sum();
        return (mean, var);
    }
    let (f, lo, hi) = density(d).unwrap();
    let mean = integrate(&|x| x * f(x), lo, hi, 1e-12);
    let var = integrate(&|x| (x - mean).powi(2) * f(x), lo, hi, 1e-12);
    (mean, var)
}

/// Atoms of a discrete law as `(x − center, probability)`, so that boundary
/// comparisons are not disturbed by rounding in `center ± offset`.
pub fn deviations(d: &Distribution) -> Option<Vec<(f64, f64)>> {
    match d.kind() {
        Kind::Degenerate { .. } => Some(vec![(0.0, 1.0)]),
        Kind::TwoPoint { offset, .. } => Some(vec![(-offset, 0.5), (offset, 0.5)]),
        Kind::ThreePoint {
            offset,
            spike_probability: p,
            ..
        } => Some(vec![(-offset, 0.5 * p), (0.0, 1.0 - p), (offset, 0.5 * p)]),
        _ => None,
    }
}

/// Oracle for `∫_{|x − m| ≥ s} (x − m)² dF`.
pub fn tail_moment(d: &Distribution, s: f64) -> f64 {
    let m = d.mean();
    if let Some(at) = deviations(d) {
        // Every discrete family here is symmetric about its center.
        return at
            .iter()
            .filter(|(y, _)| y.abs() >= s)
            .map(|(y, p)| y * y * p)
            .sum();
    }
    let (f, lo, hi) = density(d).unwrap();
    let g = |x: f64| (x - m).powi(2) * f(x);
    let left = integrate(&g, lo, (m - s).min(hi), 1e-12);
    let right = integrate(&g, (m + s).max(lo), hi, 1e-12);
    left + right
}
