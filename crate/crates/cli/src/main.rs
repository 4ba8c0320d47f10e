use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cheshire_cli::{parse_config_with, ConfigError, ConfigErrors, Kind, Overrides, RunError};

#[derive(Parser)]
#[command(
    name = "cheshire",
    version,
    about = "Dynamical quantum Cheshire cat experiments"
)]
struct Cli {
    /// `key = value` experiment file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// Override one config entry; repeatable.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Step-by-step mode amplitudes.
    Evolve,
    /// sigma_x weak value over a post-selection grid.
    WeakValue,
    /// Reference-arm interferometer, both mirror settings.
    Homodyne,
    /// Seeded signal-to-noise scan over the input tilt.
    PerturbScan,
    /// Seeded photon counting for one tilt.
    Montecarlo,
    /// Gaussian pointer centroids and intensity profile.
    Pointer,
    /// Weak value of the right-cavity projector across the pointer.
    ProjectorProfile,
    /// Run whatever `kind` the config names.
    Run,
}

impl Command {
    fn kind(self) -> Option<Kind> {
        Some(match self {
            Command::Evolve => Kind::Evolve,
            Command::WeakValue => Kind::WeakValue,
            Command::Homodyne => Kind::Homodyne,
            Command::PerturbScan => Kind::PerturbScan,
            Command::Montecarlo => Kind::MonteCarlo,
            Command::Pointer => Kind::Pointer,
            Command::ProjectorProfile => Kind::ProjectorProfile,
            Command::Run => return None,
        })
    }
}

fn config_error(message: String) -> RunError {
    RunError::Config(ConfigErrors(vec![ConfigError {
        line: None,
        key: None,
        message,
    }]))
}

fn main_inner(cli: Cli) -> Result<(), RunError> {
    let text = match &cli.config {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?,
        None => String::new(),
    };
    let mut overrides = Overrides {
        kind: cli.command.kind(),
        ..Overrides::default()
    };
    for item in &cli.set {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| config_error(format!("--set expects KEY=VALUE, got `{item}`")))?;
        overrides.set(k.trim(), v.trim());
    }
    if let Some(seed) = cli.seed {
        overrides.set("seed", seed.to_string());
    }
    if let Some(format) = &cli.format {
        overrides.set("format", format.as_str());
    }
    if let Some(out) = &cli.out {
        overrides.set("out", out.to_string_lossy());
    }
    let config = parse_config_with(&text, &overrides)?;
    if let Some(text) = cheshire_cli::run(&config)? {
        std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| RunError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let RunError::Config(errs) = &e {
                for err in &errs.0 {
                    eprintln!("config error: {err}");
                }
            }
            eprintln!("{}", e.record());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
