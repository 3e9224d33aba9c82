use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid distribution parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown fixture `{name}`; registered fixtures: {}", registry.join(", "))]
    UnknownFixture {
        name: String,
        registry: Vec<&'static str>,
    },

    /// The Lindeberg functional and its bound divide by B_n², which is zero here.
    #[error("Lindeberg functional undefined: total variance is zero at n = {n}")]
    UndefinedFunctional { n: u64 },

    #[error("cannot normalize sum: total variance is zero at n = {n}")]
    DegenerateNormalization { n: u64 },

    /// A relation that must hold by construction was violated numerically.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
