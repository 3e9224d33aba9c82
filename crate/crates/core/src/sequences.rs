//! Sequences of independent random variables and the fixture registry.
//!
//! A [`RandomSequence`] maps each index `n ≥ 1` to the law of `ξ_n`. Because
//! suprema over all `n` cannot be computed term by term, a sequence may carry
//! metadata that makes them decidable: a period, a certified envelope
//! `A(s) ≥ α_n(s)` for every `n`, a witness of tail mass that never vanishes,
//! and the known growth of its total variance.

use std::fmt;
use std::num::NonZeroU64;
use std::sync::Arc;

use serde::Serialize;

use crate::conditions::alpha;
use crate::distributions::Distribution;
use crate::error::{domain, Error, Result};
use crate::summation::CompensatedSum;

type TermFn = dyn Fn(u64) -> Distribution + Send + Sync;
type EnvelopeFn = dyn Fn(f64) -> f64 + Send + Sync;
type WitnessFn = dyn Fn(f64) -> u64 + Send + Sync;

/// Analytic behaviour of `B_n²` as `n → ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VarianceGrowth {
    /// `B_n² = 0` for every `n`.
    Zero,
    /// `B_n² → limit < ∞`.
    Bounded { limit: f64 },
    /// `B_n² → ∞`.
    Unbounded,
}

#[derive(Clone)]
pub struct RandomSequence {
    name: String,
    term: Arc<TermFn>,
    envelope: Option<Arc<EnvelopeFn>>,
    period: Option<NonZeroU64>,
    tail_witness: Option<Arc<WitnessFn>>,
    variance_growth: Option<VarianceGrowth>,
}

impl fmt::Debug for RandomSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RandomSequence")
            .field("name", &self.name)
            .field("period", &self.period)
            .field("envelope", &self.envelope.is_some())
            .field("tail_witness", &self.tail_witness.is_some())
            .field("variance_growth", &self.variance_growth)
            .finish()
    }
}

impl RandomSequence {
    pub fn new<F>(name: impl Into<String>, term: F) -> Self
    where
        F: Fn(u64) -> Distribution + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            term: Arc::new(term),
            envelope: None,
            period: None,
            tail_witness: None,
            variance_growth: None,
        }
    }

    /// Attach a function `A` with `α_n(s) ≤ A(s)` for all `n` and `A(s) → 0`.
    pub fn with_envelope<F>(mut self, envelope: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.envelope = Some(Arc::new(envelope));
        self
    }

    /// Declare that `term(n)` depends only on `n mod period`.
    pub fn with_period(mut self, period: NonZeroU64) -> Self {
        self.period = Some(period);
        self
    }

    /// Attach a map `s ↦ n` such that `α_n(s)` stays bounded away from zero
    /// however large `s` is. Used to certify failure of uniform convergence.
    pub fn with_tail_witness<F>(mut self, witness: F) -> Self
    where
        F: Fn(f64) -> u64 + Send + Sync + 'static,
    {
        self.tail_witness = Some(Arc::new(witness));
        self
    }

    pub fn with_variance_growth(mut self, growth: VarianceGrowth) -> Self {
        self.variance_growth = Some(growth);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn period(&self) -> Option<u64> {
        self.period.map(NonZeroU64::get)
    }

    pub fn variance_growth(&self) -> Option<VarianceGrowth> {
        self.variance_growth
    }

    pub fn has_envelope(&self) -> bool {
        self.envelope.is_some()
    }

    pub fn envelope(&self, s: f64) -> Option<f64> {
        self.envelope.as_ref().map(|a| a(s))
    }

    pub fn tail_witness(&self, s: f64) -> Option<u64> {
        self.tail_witness.as_ref().map(|w| w(s))
    }

    /// Law of `ξ_n`, `n ≥ 1`.
    pub fn term(&self, n: u64) -> Result<Distribution> {
        if n == 0 {
            return Err(domain("sequence indices start at 1"));
        }
        Ok((self.term)(n))
    }

    /// Laws of `ξ_1, …, ξ_n`.
    pub fn terms(&self, n: u64) -> Result<Vec<Distribution>> {
        if n == 0 {
            return Err(domain("prefix length must be >= 1"));
        }
        Ok((1..=n).map(|k| (self.term)(k)).collect())
    }
}

/// Prefix aggregates of a sequence up to index `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSumStats {
    pub n: u64,
    /// `E S_n`.
    pub sum_mean: f64,
    /// `B_n² = σ_1² + ⋯ + σ_n²`.
    pub total_variance: f64,
    pub term_variances: Vec<f64>,
}

impl PartialSumStats {
    /// `B_n`.
    pub fn total_std_dev(&self) -> f64 {
        self.total_variance.sqrt()
    }
}

pub fn total_variance(seq: &RandomSequence, n: u64) -> Result<PartialSumStats> {
    let terms = seq.terms(n)?;
    Ok(stats_of(n, &terms))
}

pub(crate) fn stats_of(n: u64, terms: &[Distribution]) -> PartialSumStats {
    let term_variances: Vec<f64> = terms.iter().map(Distribution::variance).collect();
    let total: CompensatedSum = term_variances.iter().copied().collect();
    let mean: CompensatedSum = terms.iter().map(Distribution::mean).collect();
    PartialSumStats {
        n,
        sum_mean: mean.value(),
        total_variance: total.value(),
        term_variances,
    }
}

/// Registered fixture names with a one-line description of their regime.
pub const FIXTURES: [(&str, &str); 6] = [
    (
        "iid_rademacher",
        "i.i.d. ±1; uniformly bounded, B_n² = n → ∞; CLT holds",
    ),
    (
        "dyadic_bounded",
        "±2^-n; B_n² → 1/3, limit Uniform(-√3, √3); CLT fails",
    ),
    (
        "bc_spikes",
        "±n w.p. 1/(2n²) else 0; σ_n² = 1 but no uniform tail envelope; S̃_n → 0",
    ),
    ("iid_normal", "i.i.d. Normal(0, 1); singular sequence"),
    ("all_degenerate", "point mass at 1; singular, B_n² ≡ 0"),
    (
        "mixed_two_families",
        "alternating ±1 and Uniform(-√3, √3); finite family, CLT holds",
    ),
];

/// Dyadic offsets below this index would underflow `4^-n` to zero.
const DYADIC_LAST_NORMAL: u64 = 511;

const ONE: NonZeroU64 = NonZeroU64::MIN;

/// Look up a fixture by its registry name.
pub fn fixture(name: &str) -> Result<RandomSequence> {
    let seq = match name {
        "iid_rademacher" => {
            RandomSequence::new(name, |_| Distribution::two_point(0.0, 1.0).unwrap())
                .with_period(ONE)
                .with_envelope(|s| if s <= 1.0 { 1.0 } else { 0.0 })
                .with_variance_growth(VarianceGrowth::Unbounded)
        }
        "dyadic_bounded" => RandomSequence::new(name, |n| {
            if n <= DYADIC_LAST_NORMAL {
                Distribution::two_point(0.0, (-(n as f64)).exp2()).unwrap()
            } else {
                // ±2^-n is below f64 resolution of any partial sum here.
                Distribution::degenerate(0.0).unwrap()
            }
        })
        .with_envelope(|s| if s <= 0.5 { 1.0 } else { 0.0 })
        .with_variance_growth(VarianceGrowth::Bounded { limit: 1.0 / 3.0 }),
        "bc_spikes" => RandomSequence::new(name, |n| {
            let h = n as f64;
            Distribution::three_point(0.0, h, 1.0 / (h * h)).unwrap()
        })
        .with_tail_witness(|s| s.ceil().max(1.0) as u64)
        .with_variance_growth(VarianceGrowth::Unbounded),
        "iid_normal" => {
            let law = Distribution::normal(0.0, 1.0).unwrap();
            RandomSequence::new(name, move |_| law)
                .with_period(ONE)
                .with_envelope(move |s| alpha(&law, s).unwrap_or(0.0))
                .with_variance_growth(VarianceGrowth::Unbounded)
        }
        "all_degenerate" => {
            RandomSequence::new(name, |_| Distribution::degenerate(1.0).unwrap())
                .with_period(ONE)
                .with_envelope(|_| 0.0)
                .with_variance_growth(VarianceGrowth::Zero)
        }
        "mixed_two_families" => {
            let rademacher = Distribution::two_point(0.0, 1.0).unwrap();
            let r3 = 3f64.sqrt();
            let flat = Distribution::uniform(-r3, r3).unwrap();
            RandomSequence::new(name, move |n| if n % 2 == 1 { rademacher } else { flat })
                .with_period(NonZeroU64::new(2).unwrap())
                .with_envelope(move |s| {
                    let a = alpha(&rademacher, s).unwrap_or(0.0);
                    let b = alpha(&flat, s).unwrap_or(0.0);
                    a.max(b)
                })
                .with_variance_growth(VarianceGrowth::Unbounded)
        }
        _ => {
            return Err(Error::UnknownFixture {
                name: name.to_string(),
                registry: FIXTURES.iter().map(|(n, _)| *n).collect(),
            })
        }
    };
    Ok(seq)
}
