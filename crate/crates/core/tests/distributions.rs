mod common;

use clt_core::montecarlo::ks_statistic;
use clt_core::{Distribution, Kind};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Twenty random parameter points per family.
fn parameter_points(seed: u64) -> Vec<Distribution> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..20 {
        let c = rng.random_range(-5.0..5.0);
        let a = rng.random_range(0.05..4.0);
        let p = rng.random_range(0.01..1.0);
        let w = rng.random_range(0.1..6.0);
        let lambda = rng.random_range(0.2..5.0);
        out.push(Distribution::degenerate(c).unwrap());
        out.push(Distribution::normal(c, a * a).unwrap());
        out.push(Distribution::two_point(c, a).unwrap());
        out.push(Distribution::three_point(c, a, p).unwrap());
        out.push(Distribution::uniform(c, c + w).unwrap());
        out.push(Distribution::exponential(lambda).unwrap());
    }
    out
}

/// A scale for the threshold grid: the largest deviation that still carries mass.
fn reach(d: &Distribution) -> f64 {
    match d.kind() {
        Kind::Normal { variance, .. } => 6.0 * variance.sqrt(),
        Kind::Exponential { rate } => 8.0 / rate,
        Kind::Degenerate { .. } => 1.0,
        _ => 1.2 * d.max_deviation().unwrap(),
    }
}

fn close(got: f64, want: f64, rel: f64) -> bool {
    (got - want).abs() <= rel * want.abs() || (got.abs() < 1e-300 && want.abs() < 1e-300)
}

#[test]
fn tail_moments_match_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for d in parameter_points(1) {
        let mut grid: Vec<f64> = (0..19).map(|_| rng.random_range(0.0..reach(&d))).collect();
        // Boundary atoms are included; for continuous laws use one more random point.
        grid.push(match common::atoms(&d) {
            Some(_) => d.max_deviation().unwrap(),
            None => rng.random_range(0.0..reach(&d)),
        });
        for s in grid {
            let got = d.tail_second_moment(s).unwrap();
            let want = common::tail_moment(&d, s);
            assert!(close(got, want, 1e-8), "{d} s = {s}: {got} vs {want}");
            checked += 1;
        }
    }
    assert!(checked >= 400);
}

#[test]
fn stored_moments_match_oracles() {
    for d in parameter_points(2) {
        let (mean, var) = common::moments(&d);
        assert!((d.mean() - mean).abs() <= 1e-9 * (1.0 + mean.abs()), "{d}");
        assert!(close(d.variance(), var, 1e-9), "{d}: {} vs {var}", d.variance());
        assert_eq!(d.variance() == 0.0, matches!(d.kind(), Kind::Degenerate { .. }));
    }
}

#[test]
fn tail_at_zero_is_the_variance() {
    for d in parameter_points(3) {
        let t = d.tail_second_moment(0.0).unwrap();
        match d.kind() {
            Kind::Normal { .. } | Kind::Uniform { .. } | Kind::Exponential { .. } => {
                assert!(close(t, d.variance(), 1e-12), "{d}")
            }
            _ => assert_eq!(t, d.variance(), "{d}"),
        }
    }
}

#[test]
fn tail_vanishes_far_out() {
    for d in parameter_points(4) {
        assert!(d.tail_second_moment(100.0 * reach(&d)).unwrap() < 1e-300, "{d}");
    }
}

fn any_distribution() -> impl Strategy<Value = Distribution> {
    prop_oneof![
        (-10.0..10.0f64).prop_map(|c| Distribution::degenerate(c).unwrap()),
        (-10.0..10.0f64, 0.01..10.0f64).prop_map(|(m, v)| Distribution::normal(m, v).unwrap()),
        (-10.0..10.0f64, 0.01..5.0f64).prop_map(|(c, a)| Distribution::two_point(c, a).unwrap()),
        (-10.0..10.0f64, 0.01..5.0f64, 0.001..1.0f64)
            .prop_map(|(c, a, p)| Distribution::three_point(c, a, p).unwrap()),
        (-10.0..10.0f64, 0.01..10.0f64).prop_map(|(a, w)| Distribution::uniform(a, a + w).unwrap()),
        (0.05..20.0f64).prop_map(|r| Distribution::exponential(r).unwrap()),
    ]
}

proptest! {
    #[test]
    fn tail_moment_is_monotone_and_bounded(d in any_distribution(), s1 in 0.0..30.0f64, ds in 0.0..30.0f64) {
        let s2 = s1 + ds;
        let t1 = d.tail_second_moment(s1).unwrap();
        let t2 = d.tail_second_moment(s2).unwrap();
        prop_assert!(t2 <= t1, "{} T({}) = {} < T({}) = {}", d, s1, t1, s2, t2);
        prop_assert!(t2 >= 0.0);
        prop_assert!(t1 <= d.variance() * (1.0 + 1e-12));
    }

    #[test]
    fn cdf_is_a_distribution_function(d in any_distribution(), x in -30.0..30.0f64, dx in 0.0..10.0f64) {
        let (a, b) = (d.cdf(x), d.cdf(x + dx));
        prop_assert!((0.0..=1.0).contains(&a));
        prop_assert!(a <= b);
    }
}

/// `sup_x |F_m(x) − F(x)|` for a law with finitely many atoms, comparing
/// both one-sided limits at every atom.
fn ks_discrete(samples: &[f64], d: &Distribution) -> f64 {
    let at = common::atoms(d).unwrap();
    let m = samples.len() as f64;
    at.iter()
        .map(|&(x, _)| {
            let at_or_below = samples.iter().filter(|&&v| v <= x).count() as f64 / m;
            let below = samples.iter().filter(|&&v| v < x).count() as f64 / m;
            let left: f64 = at.iter().filter(|(y, _)| *y < x).map(|(_, p)| p).sum();
            (at_or_below - d.cdf(x)).abs().max((below - left).abs())
        })
        .fold(0.0, f64::max)
}

#[test]
fn samplers_agree_with_cdfs() {
    let m = 100_000;
    let threshold = 1.63 / (m as f64).sqrt() * 1.5;
    let laws = [
        Distribution::degenerate(2.5).unwrap(),
        Distribution::normal(-1.0, 4.0).unwrap(),
        Distribution::two_point(0.5, 1.5).unwrap(),
        Distribution::three_point(0.0, 3.0, 0.2).unwrap(),
        Distribution::uniform(-3f64.sqrt(), 3f64.sqrt()).unwrap(),
        Distribution::exponential(1.7).unwrap(),
    ];
    for (i, d) in laws.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + i as u64);
        let xs: Vec<f64> = (0..m).map(|_| d.sample(&mut rng)).collect();
        let ks = match common::atoms(d) {
            Some(_) => ks_discrete(&xs, d),
            None => ks_statistic(&xs, |x| d.cdf(x)).unwrap(),
        };
        assert!(ks < threshold, "{d}: KS = {ks} >= {threshold}");

        let mean = xs.iter().sum::<f64>() / m as f64;
        assert!(
            (mean - d.mean()).abs() <= 5.0 * d.std_dev() / (m as f64).sqrt(),
            "{d}: sample mean {mean}"
        );
    }
}

#[test]
fn standard_normal_sample_variance() {
    // Var of the sample variance is 2/m; 5σ at m = 10⁶ is ±0.0071.
    let d = Distribution::normal(0.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let m = 1_000_000;
    let xs: Vec<f64> = (0..m).map(|_| d.sample(&mut rng)).collect();
    let mean = xs.iter().sum::<f64>() / m as f64;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (m as f64 - 1.0);
    assert!((0.99..=1.01).contains(&var), "{var}");
}
