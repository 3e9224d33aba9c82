//! Scenario-driven front end: parses a study description, runs the condition
//! checks and the Monte Carlo study, and writes CSV/JSON reports plus a
//! plain-text summary.

pub mod error;
pub mod run;
pub mod scenario;
pub mod verdict;

pub use error::CliError;
pub use run::{execute, list_fixtures, run_scenario, write_artifacts, StudyOutcome};
pub use scenario::{Overrides, Scenario};
pub use verdict::{clt_expectation, Expectation, VarianceTrend};
