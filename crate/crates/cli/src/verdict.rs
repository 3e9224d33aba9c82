//! Whether the central limit theorem is expected, derived only from the
//! hypotheses the theorem states: non-singularity, the uniform-convergence
//! condition, and divergence of the total variance.

use std::fmt;

use clt_core::{Singularity, UniformConvergence, VarianceGrowth};

/// What is known about `B_n²` as `n → ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VarianceTrend {
    Unbounded,
    Bounded,
    Zero,
    Unknown,
}

impl From<Option<VarianceGrowth>> for VarianceTrend {
    fn from(g: Option<VarianceGrowth>) -> Self {
        match g {
            Some(VarianceGrowth::Unbounded) => Self::Unbounded,
            Some(VarianceGrowth::Bounded { .. }) => Self::Bounded,
            Some(VarianceGrowth::Zero) => Self::Zero,
            None => Self::Unknown,
        }
    }
}

impl fmt::Display for VarianceTrend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Unbounded => "increases indefinitely",
            Self::Bounded => "bounded",
            Self::Zero => "identically zero",
            Self::Unknown => "unknown beyond the inspected prefix",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Yes,
    /// Hypotheses hold and the total variance stays bounded.
    No,
    /// The theorem's hypotheses fail; it says nothing here.
    OutOfHypothesis(&'static str),
    /// A hypothesis could not be decided.
    Undetermined(&'static str),
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Yes => f.write_str("yes"),
            Self::No => f.write_str("no (total variance bounded)"),
            Self::OutOfHypothesis(why) => write!(f, "out-of-hypothesis ({why})"),
            Self::Undetermined(why) => write!(f, "undetermined ({why})"),
        }
    }
}

pub fn clt_expectation(
    singularity: Singularity,
    uniform: UniformConvergence,
    trend: VarianceTrend,
) -> Expectation {
    use Expectation::*;
    match singularity {
        Singularity::Singular => return OutOfHypothesis("singular sequence"),
        Singularity::SingularOnPrefix => return Undetermined("singular on the inspected prefix"),
        Singularity::NonSingular { .. } => {}
    }
    match uniform {
        UniformConvergence::Fails => return OutOfHypothesis("uniform convergence fails"),
        UniformConvergence::HoldsCertified => {}
        UniformConvergence::HoldsOnPrefix
        | UniformConvergence::Inconclusive
        | UniformConvergence::SingularTrivial => {
            return Undetermined("uniform convergence not certified")
        }
    }
    match trend {
        VarianceTrend::Unbounded => Yes,
        VarianceTrend::Bounded | VarianceTrend::Zero => No,
        VarianceTrend::Unknown => Undetermined("total variance trend unknown"),
    }
}
