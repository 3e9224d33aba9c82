//! Numerical companion to a formulation of the central limit theorem for
//! independent sequences with finite variances.
//!
//! * [`distributions`]: laws with exact moments and closed-form tail second moments.
//! * [`sequences`]: independent sequences, partial-sum statistics and fixtures.
//! * [`conditions`]: tail-variance functions `α_n(s)`, uniform convergence,
//!   singularity, and the Lindeberg functional with its domination bound.
//! * [`montecarlo`]: seeded simulation of normalized sums and KS distances.

pub mod conditions;
pub mod distributions;
pub mod error;
pub mod montecarlo;
pub mod normal;
pub mod sequences;
mod summation;

pub use conditions::{
    alpha, check_uniform_convergence, classify_singularity, lindeberg_functional,
    lindeberg_upper_bound, AlphaProfile, LindebergBound, Singularity, UniformConvergence,
};
pub use distributions::{Distribution, Kind};
pub use error::{Error, Result};
pub use sequences::{fixture, total_variance, PartialSumStats, RandomSequence, VarianceGrowth, FIXTURES};
pub use summation::CompensatedSum;
