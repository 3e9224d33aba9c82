use std::path::PathBuf;

use thiserror::Error;

/// Failures of a scenario run, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    UnknownFixture(clt_core::Error),

    #[error("{0}")]
    Numeric(clt_core::Error),

    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Parse { .. } | Self::Invalid(_) | Self::Read { .. } => 2,
            Self::UnknownFixture(_) => 3,
            Self::Numeric(_) | Self::Write { .. } => 4,
        }
    }
}

impl From<clt_core::Error> for CliError {
    fn from(e: clt_core::Error) -> Self {
        match e {
            clt_core::Error::UnknownFixture { .. } => Self::UnknownFixture(e),
            other => Self::Numeric(other),
        }
    }
}
