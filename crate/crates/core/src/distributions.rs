//! Laws of single random variables with finite second moment.
//!
//! Every family exposes its exact mean and variance, a sampler, its
//! distribution function, and the closed-form tail second moment
//!
//! ```text
//! T(s) = ∫_{|x − m| ≥ s} (x − m)² dF(x),   s ≥ 0,
//! ```
//!
//! where `m` is the mean. The integrating measure is `dF(x)`; the boundary
//! `|x − m| = s` is included, which only matters for atoms.

use std::fmt;

use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

use crate::error::{domain, Error, Result};
use crate::normal;

/// Family tag and parameters of a [`Distribution`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kind {
    /// Point mass at `value`.
    Degenerate { value: f64 },
    Normal { mean: f64, variance: f64 },
    /// `center ± offset`, each with probability 1/2.
    TwoPoint { center: f64, offset: f64 },
    /// `center ± offset` each with probability `spike_probability / 2`,
    /// otherwise `center`.
    ThreePoint {
        center: f64,
        offset: f64,
        spike_probability: f64,
    },
    /// Continuous uniform on `[low, high]`.
    Uniform { low: f64, high: f64 },
    /// Exponential with the given rate on its raw support `[0, ∞)`; the mean
    /// is `1/rate`. Callers center through the mean, the support is never
    /// shifted.
    Exponential { rate: f64 },
}

/// An immutable law with cached first two moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distribution {
    kind: Kind,
    mean: f64,
    variance: f64,
}

fn finite(name: &str, x: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::InvalidParameter(format!("{name} must be finite, got {x}")))
    }
}

fn positive(name: &str, x: f64) -> Result<f64> {
    if finite(name, x)? > 0.0 {
        Ok(x)
    } else {
        Err(Error::InvalidParameter(format!("{name} must be positive, got {x}")))
    }
}

impl Distribution {
    pub fn new(kind: Kind) -> Result<Self> {
        let (mean, variance) = match kind {
            Kind::Degenerate { value } => (finite("value", value)?, 0.0),
            Kind::Normal { mean, variance } => {
                (finite("mean", mean)?, positive("variance", variance)?)
            }
            Kind::TwoPoint { center, offset } => {
                let a = positive("offset", offset)?;
                (finite("center", center)?, a * a)
            }
            Kind::ThreePoint {
                center,
                offset,
                spike_probability,
            } => {
                let a = positive("offset", offset)?;
                let p = positive("spike probability", spike_probability)?;
                if p > 1.0 {
                    return Err(Error::InvalidParameter(format!(
                        "spike probability must be at most 1, got {p}"
                    )));
                }
                (finite("center", center)?, p * a * a)
            }
            Kind::Uniform { low, high } => {
                let (low, high) = (finite("low", low)?, finite("high", high)?);
                if low >= high {
                    return Err(Error::InvalidParameter(format!(
                        "uniform bounds must satisfy low < high, got [{low}, {high}]"
                    )));
                }
                let w = high - low;
                (low + 0.5 * w, w * w / 12.0)
            }
            Kind::Exponential { rate } => {
                let r = positive("rate", rate)?;
                (1.0 / r, 1.0 / (r * r))
            }
        };
        Ok(Self {
            kind,
            mean,
            variance,
        })
    }

    pub fn degenerate(value: f64) -> Result<Self> {
        Self::new(Kind::Degenerate { value })
    }

    pub fn normal(mean: f64, variance: f64) -> Result<Self> {
        Self::new(Kind::Normal { mean, variance })
    }

    pub fn two_point(center: f64, offset: f64) -> Result<Self> {
        Self::new(Kind::TwoPoint { center, offset })
    }

    pub fn three_point(center: f64, offset: f64, spike_probability: f64) -> Result<Self> {
        Self::new(Kind::ThreePoint {
            center,
            offset,
            spike_probability,
        })
    }

    pub fn uniform(low: f64, high: f64) -> Result<Self> {
        Self::new(Kind::Uniform { low, high })
    }

    pub fn exponential(rate: f64) -> Result<Self> {
        Self::new(Kind::Exponential { rate })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn variance(&self) -> f64 {
        self.variance
    }

    pub fn std_dev(&self) -> f64 {
        self.variance.sqrt()
    }

    /// Degenerate or normal: the members allowed in a singular sequence.
    pub fn is_degenerate_or_normal(&self) -> bool {
        matches!(self.kind, Kind::Degenerate { .. } | Kind::Normal { .. })
    }

    /// Largest possible `|x − m|`, or `None` for unbounded support.
    pub fn max_deviation(&self) -> Option<f64> {
        match self.kind {
            Kind::Degenerate { .. } => Some(0.0),
            Kind::TwoPoint { offset, .. } | Kind::ThreePoint { offset, .. } => Some(offset),
            Kind::Uniform { low, high } => Some(0.5 * (high - low)),
            Kind::Normal { .. } | Kind::Exponential { .. } => None,
        }
    }

    /// Closed-form tail second moment `T(s)`; see the module docs.
    ///
    /// `T(0)` is the variance and `T` decreases to zero.
    pub fn tail_second_moment(&self, s: f64) -> Result<f64> {
        if !(s >= 0.0) {
            return Err(domain(format!("tail threshold must be >= 0, got {s}")));
        }
        let t = match self.kind {
            Kind::Degenerate { .. } => 0.0,
            Kind::TwoPoint { offset, .. } => {
                if offset >= s {
                    self.variance
                } else {
                    0.0
                }
            }
            Kind::ThreePoint { offset, .. } => {
                // The central atom sits at distance 0 and carries no second moment.
                if offset >= s {
                    self.variance
                } else {
                    0.0
                }
            }
            Kind::Normal { .. } => {
                let sigma = self.std_dev();
                let z = s / sigma;
                // ∫_{|z| ≥ t} z² φ(z) dz = 2 (t φ(t) + 1 − Φ(t))
                self.variance * 2.0 * (z * normal::pdf(z) + normal::sf(z))
            }
            Kind::Uniform { low, high } => {
                let half = 0.5 * (high - low);
                if s >= half {
                    0.0
                } else {
                    let r = s / half;
                    self.variance * (1.0 - r * r * r)
                }
            }
            Kind::Exponential { rate } => {
                // In units of the mean: t = rate · s, the mean sits at 1.
                let t = rate * s;
                let upper = (-1.0 - t).exp() * (t * t + 2.0 * t + 2.0);
                let lower = if t < 1.0 {
                    1.0 - (t - 1.0).exp() * (t * t - 2.0 * t + 2.0)
                } else {
                    0.0
                };
                self.variance * (upper + lower.max(0.0))
            }
        };
        Ok(t)
    }

    /// Draw one variate.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self.kind {
            Kind::Degenerate { value } => value,
            Kind::Normal { mean, .. } => {
                let z: f64 = rng.sample(StandardNormal);
                mean + self.std_dev() * z
            }
            Kind::TwoPoint { center, offset } => {
                if rng.random::<bool>() {
                    center + offset
                } else {
                    center - offset
                }
            }
            Kind::ThreePoint {
                center,
                offset,
                spike_probability,
            } => {
                let u: f64 = rng.random();
                if u < 0.5 * spike_probability {
                    center - offset
                } else if u < spike_probability {
                    center + offset
                } else {
                    center
                }
            }
            Kind::Uniform { low, high } => {
                let u: f64 = rng.random();
                low + (high - low) * u
            }
            Kind::Exponential { rate } => {
                let e: f64 = rng.sample(Exp1);
                e / rate
            }
        }
    }

    /// Right-continuous distribution function.
    pub fn cdf(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Degenerate { value } => step(x >= value),
            Kind::Normal { mean, .. } => normal::cdf((x - mean) / self.std_dev()),
            Kind::TwoPoint { center, offset } => {
                if x < center - offset {
                    0.0
                } else if x < center + offset {
                    0.5
                } else {
                    1.0
                }
            }
            Kind::ThreePoint {
                center,
                offset,
                spike_probability,
            } => {
                if x < center - offset {
                    0.0
                } else if x < center {
                    0.5 * spike_probability
                } else if x < center + offset {
                    1.0 - 0.5 * spike_probability
                } else {
                    1.0
                }
            }
            Kind::Uniform { low, high } => ((x - low) / (high - low)).clamp(0.0, 1.0),
            Kind::Exponential { rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-rate * x).exp_m1()
                }
            }
        }
    }
}

fn step(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Degenerate { value } => write!(f, "Degenerate({value})"),
            Kind::Normal { mean, variance } => write!(f, "Normal({mean}, {variance})"),
            Kind::TwoPoint { center, offset } => write!(f, "TwoPoint({center} ± {offset})"),
            Kind::ThreePoint {
                center,
                offset,
                spike_probability,
            } => write!(f, "ThreePoint({center} ± {offset}, p = {spike_probability})"),
            Kind::Uniform { low, high } => write!(f, "Uniform({low}, {high})"),
            Kind::Exponential { rate } => write!(f, "Exponential({rate})"),
        }
    }
}
