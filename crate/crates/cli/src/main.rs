use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

mod commands;
mod config;

use config::{Cli, CommandKind, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Compute(String),
    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| CliError::Io {
                    path: parent.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            std::fs::write(path, text).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })
        }
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| CliError::Io {
            path: "stdout".into(),
            message: e.to_string(),
        }),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let kind = cli.command.kind();
    let cfg = cli.command.args().clone().resolve(kind)?;
    let text = match cfg.command {
        CommandKind::Energies => commands::energies(&cfg)?,
        CommandKind::Table => commands::table(&cfg)?,
        CommandKind::Wavefunction => commands::wavefunction(&cfg)?,
        CommandKind::Verify => {
            let v = commands::verify(&cfg)?;
            emit(&cfg, &v.report)?;
            return Ok(if v.failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    emit(&cfg, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("boundstate: {e}");
            ExitCode::from(2)
        }
    }
}
