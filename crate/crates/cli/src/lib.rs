//! Config parsing, dispatch and deterministic CSV/JSON output for the
//! `cheshire` command-line tool.

pub mod config;
pub mod format;
pub mod run;

pub use config::{
    parse_config, parse_config_with, ConfigError, ConfigErrors, ExperimentConfig, Format, Kind,
    Overrides,
};
pub use run::{execute, run, run_to_string, RunError};
