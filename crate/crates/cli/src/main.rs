use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use clt_cli::{list_fixtures, run_scenario, CliError, Overrides};

/// Check central limit theorem hypotheses and simulate normalized sums.
#[derive(Debug, Parser)]
#[command(name = "cltcheck", version)]
struct Cli {
    /// Root seed for all random streams (overrides the scenario).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output directory (overrides the scenario's out_dir).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Samples per n (overrides the scenario).
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Do not print the summary.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a scenario file.
    Run { scenario: PathBuf },
    /// List the registered fixtures.
    ListFixtures,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListFixtures => {
            print!("{}", list_fixtures());
            ExitCode::SUCCESS
        }
        Command::Run { scenario } => {
            let overrides = Overrides {
                seed: cli.seed,
                out_dir: cli.out,
                samples: cli.samples,
            };
            match run_scenario(&scenario, &overrides) {
                Ok(outcome) => {
                    if !cli.quiet {
                        print!("{}", outcome.summary);
                    }
                    ExitCode::SUCCESS
                }
                Err(e @ CliError::Parse { .. }) => {
                    eprintln!("cltcheck: {}:{e}", scenario.display());
                    ExitCode::from(e.exit_code())
                }
                Err(e) => {
                    eprintln!("cltcheck: {}: {e}", scenario.display());
                    ExitCode::from(e.exit_code())
                }
            }
        }
    }
}
