//! Command-line front end for `lpfrontier`: CSV ingestion, estimation,
//! simulation and Monte-Carlo campaigns with reproducible, self-describing
//! outputs.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod io;

pub use args::Cli;
pub use config::{Job, RunConfig, SCHEMA_VERSION};
pub use error::{CliError, CliResult};
pub use io::{read_sample_csv, write_curve_csv, write_sample_csv};

/// Parses `args`, resolves the configuration and runs it.
pub fn run_from_args<I, T>(args: I) -> CliResult<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Config(e.to_string()))?;
    commands::run(&RunConfig::from_cli(cli)?)
}
