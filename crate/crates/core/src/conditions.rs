//! Tail-variance functions, the uniform-convergence condition, singularity,
//! and the Lindeberg functional together with its domination bound.
//!
//! For a law with mean `m` and variance `σ² > 0`,
//! `α(s) = σ⁻² ∫_{|x − m| ≥ s} (x − m)² dF(x)`, and `α ≡ 0` when `σ = 0`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::distributions::Distribution;
use crate::error::{domain, Error, Result};
use crate::sequences::{stats_of, PartialSumStats, RandomSequence};
use crate::summation::CompensatedSum;

/// Fraction of the variance of `d` carried by mass at distance `≥ s` from
/// its mean.
pub fn alpha(d: &Distribution, s: f64) -> Result<f64> {
    let tail = d.tail_second_moment(s)?;
    if d.variance() == 0.0 {
        return Ok(0.0);
    }
    Ok((tail / d.variance()).clamp(0.0, 1.0))
}

/// Outcome of checking `sup_n α_n(s) → 0` as `s → ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UniformConvergence {
    /// Proven for every `n`, via an envelope or exact periodic supremum.
    HoldsCertified,
    /// Only the supremum over the inspected prefix is below tolerance.
    HoldsOnPrefix,
    /// A witness keeps `sup_n α_n(s)` away from zero for arbitrarily large `s`.
    Fails,
    /// Every inspected term is degenerate, so `α ≡ 0`.
    SingularTrivial,
    /// None of the above could be established.
    Inconclusive,
}

impl UniformConvergence {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::HoldsCertified => "HoldsCertified",
            Self::HoldsOnPrefix => "HoldsOnPrefix",
            Self::Fails => "Fails",
            Self::SingularTrivial => "SingularTrivial",
            Self::Inconclusive => "Inconclusive",
        }
    }
}

impl fmt::Display for UniformConvergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tabulated `α_n(s)` over a grid of `s` and a prefix `n = 1..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaProfile {
    pub s_grid: Vec<f64>,
    pub prefix: u64,
    /// `values[n - 1][j] = α_n(s_grid[j])`.
    pub values: Vec<Vec<f64>>,
    /// Column maxima over the prefix. Exact suprema over all `n` when the
    /// sequence has a period not exceeding the prefix.
    pub sup_row: Vec<f64>,
    pub envelope_row: Option<Vec<f64>>,
    pub verdict: UniformConvergence,
    /// Human-readable justification of the verdict.
    pub evidence: String,
}

/// `α` values at or above this level count as non-vanishing tail mass.
pub const FAILURE_FLOOR: f64 = 0.5;

/// Default tolerance on `sup_n α_n(s_max)` for a certified verdict.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

pub fn check_uniform_convergence(
    seq: &RandomSequence,
    s_grid: &[f64],
    prefix: u64,
    tol: f64,
) -> Result<AlphaProfile> {
    let Some(&s_max) = s_grid.last() else {
        return Err(domain("s grid must not be empty"));
    };
    if s_grid.iter().any(|s| !(*s >= 0.0) || !s.is_finite()) {
        return Err(domain("s grid values must be finite and >= 0"));
    }
    if s_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(domain("s grid must be strictly increasing"));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be > 0, got {tol}")));
    }
    let terms = seq.terms(prefix)?;

    let values = terms
        .par_iter()
        .map(|d| s_grid.iter().map(|&s| alpha(d, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let sup_row: Vec<f64> = (0..s_grid.len())
        .map(|j| values.iter().map(|row| row[j]).fold(0.0, f64::max))
        .collect();
    let envelope_row = seq
        .has_envelope()
        .then(|| s_grid.iter().map(|&s| seq.envelope(s).unwrap()).collect());

    let (verdict, evidence) = uniform_verdict(seq, &terms, s_max, *sup_row.last().unwrap(), tol)?;

    Ok(AlphaProfile {
        s_grid: s_grid.to_vec(),
        prefix,
        values,
        sup_row,
        envelope_row,
        verdict,
        evidence,
    })
}

fn uniform_verdict(
    seq: &RandomSequence,
    terms: &[Distribution],
    s_max: f64,
    prefix_sup: f64,
    tol: f64,
) -> Result<(UniformConvergence, String)> {
    use UniformConvergence::*;

    if terms.iter().all(|d| d.variance() == 0.0) {
        return Ok((
            SingularTrivial,
            format!("all {} inspected terms are degenerate", terms.len()),
        ));
    }

    if let Some(probe) = tail_failure_probe(seq, s_max)? {
        return Ok((Fails, probe));
    }

    if let Some(a) = seq.envelope(s_max) {
        if a <= tol {
            return Ok((
                HoldsCertified,
                format!("envelope A({s_max}) = {a} <= {tol}"),
            ));
        }
    }

    if let Some(p) = seq.period() {
        if p <= terms.len() as u64 && prefix_sup <= tol {
            return Ok((
                HoldsCertified,
                format!("period {p}: exact sup_n alpha_n({s_max}) = {prefix_sup} <= {tol}"),
            ));
        }
    }

    if prefix_sup <= tol {
        return Ok((
            HoldsOnPrefix,
            format!(
                "max over n <= {} of alpha_n({s_max}) = {prefix_sup} <= {tol}; not certified beyond the prefix",
                terms.len()
            ),
        ));
    }

    Ok((
        Inconclusive,
        format!("sup of alpha_n({s_max}) over the prefix is {prefix_sup} > {tol}"),
    ))
}

/// Evaluates the sequence's tail witness at `s_max` and three further
/// decades. Returns the evidence string when every probe shows
/// `α_n(s) ≥ FAILURE_FLOOR`.
fn tail_failure_probe(seq: &RandomSequence, s_max: f64) -> Result<Option<String>> {
    let base = s_max.max(1.0);
    let mut hits = Vec::new();
    for s in [base, 10.0 * base, 100.0 * base, 1000.0 * base] {
        let Some(n) = seq.tail_witness(s) else {
            return Ok(None);
        };
        let a = alpha(&seq.term(n)?, s)?;
        if a < FAILURE_FLOOR {
            return Ok(None);
        }
        hits.push(format!("alpha_{n}({s}) = {a}"));
    }
    Ok(Some(format!(
        "tail witness: {} (>= {FAILURE_FLOOR})",
        hits.join(", ")
    )))
}

impl AlphaProfile {
    /// CSV with header `s,alpha_1,...,alpha_N,sup` followed by a
    /// `# verdict=<value>` comment row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s");
        for n in 1..=self.prefix {
            out.push_str(&format!(",alpha_{n}"));
        }
        out.push_str(",sup\n");
        for (j, s) in self.s_grid.iter().enumerate() {
            out.push_str(&s.to_string());
            for row in &self.values {
                out.push(',');
                out.push_str(&row[j].to_string());
            }
            out.push(',');
            out.push_str(&self.sup_row[j].to_string());
            out.push('\n');
        }
        out.push_str(&format!("# verdict={}\n", self.verdict));
        out
    }
}

/// Outcome of Definition-2 style classification by kind tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Singularity {
    /// Every member is degenerate or normal (proven through the period).
    Singular,
    /// Term `witness` is neither degenerate nor normal.
    NonSingular { witness: u64 },
    /// No counterexample within the prefix, nothing known beyond it.
    SingularOnPrefix,
}

impl fmt::Display for Singularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Singular => f.write_str("Singular"),
            Self::NonSingular { witness } => write!(f, "NonSingular (witness n = {witness})"),
            Self::SingularOnPrefix => f.write_str("SingularOnPrefix"),
        }
    }
}

pub fn classify_singularity(seq: &RandomSequence, prefix: u64) -> Result<Singularity> {
    if prefix == 0 {
        return Err(domain("prefix length must be >= 1"));
    }
    let (limit, exact) = match seq.period() {
        Some(p) => (p, true),
        None => (prefix, false),
    };
    for n in 1..=limit {
        if !seq.term(n)?.is_degenerate_or_normal() {
            return Ok(Singularity::NonSingular { witness: n });
        }
    }
    Ok(if exact {
        Singularity::Singular
    } else {
        Singularity::SingularOnPrefix
    })
}

/// `L_n(ε) = B_n⁻² Σ_{k ≤ n} ∫_{|x − m_k| ≥ ε B_n} (x − m_k)² dF_k`.
pub fn lindeberg_functional(seq: &RandomSequence, n: u64, eps: f64) -> Result<f64> {
    let terms = seq.terms(n)?;
    lindeberg_from_terms(&terms, &stats_of(n, &terms), eps)
}

pub(crate) fn lindeberg_from_terms(
    terms: &[Distribution],
    stats: &PartialSumStats,
    eps: f64,
) -> Result<f64> {
    let threshold = lindeberg_threshold(stats, eps)?;
    let mut tails = CompensatedSum::new();
    for d in terms {
        tails.add(d.tail_second_moment(threshold)?);
    }
    Ok(tails.value() / stats.total_variance)
}

fn lindeberg_threshold(stats: &PartialSumStats, eps: f64) -> Result<f64> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(domain(format!("eps must be > 0, got {eps}")));
    }
    if stats.total_variance <= 0.0 {
        return Err(Error::UndefinedFunctional { n: stats.n });
    }
    Ok(eps * stats.total_std_dev())
}

/// Right-hand side of `L_n(ε) ≤ sup_{k ≤ n} α_k(ε B_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LindebergBound {
    /// `max_{k ≤ n} α_k(ε B_n)`.
    pub prefix_sup: f64,
    /// `A(ε B_n)` when the sequence carries an envelope.
    pub envelope: Option<f64>,
}

impl LindebergBound {
    /// The sharper of the two reported bounds.
    pub fn value(&self) -> f64 {
        match self.envelope {
            Some(a) => a.min(self.prefix_sup),
            None => self.prefix_sup,
        }
    }
}

pub fn lindeberg_upper_bound(seq: &RandomSequence, n: u64, eps: f64) -> Result<LindebergBound> {
    let terms = seq.terms(n)?;
    bound_from_terms(seq, &terms, &stats_of(n, &terms), eps)
}

pub(crate) fn bound_from_terms(
    seq: &RandomSequence,
    terms: &[Distribution],
    stats: &PartialSumStats,
    eps: f64,
) -> Result<LindebergBound> {
    let threshold = lindeberg_threshold(stats, eps)?;
    let mut prefix_sup: f64 = 0.0;
    for d in terms {
        prefix_sup = prefix_sup.max(alpha(d, threshold)?);
    }
    Ok(LindebergBound {
        prefix_sup,
        envelope: seq.envelope(threshold),
    })
}
