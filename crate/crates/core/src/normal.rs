//! Standard normal density and distribution function.
//!
//! `Φ` is evaluated through the complementary error function of the pure-Rust
//! `libm` port of musl, `Φ(x) = erfc(-x/√2)/2`. musl's `erfc` is a rational
//! approximation accurate to about one ulp and contains no platform-dependent
//! code paths, so results are bit-reproducible across targets. Going through
//! `erfc` rather than `1 + erf` keeps full relative accuracy in the lower tail.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// Standard normal density.
pub fn pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Standard normal distribution function Φ(x).
pub fn cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Upper tail 1 − Φ(x), without cancellation for large x.
pub fn sf(x: f64) -> f64 {
    0.5 * libm::erfc(x * FRAC_1_SQRT_2)
}
