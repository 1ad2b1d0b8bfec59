//! `qswitch`: sweeps, classification, oracle validation and fractional-order
//! scans for three depolarizing channels in a superposition of causal orders.

mod classify;
mod config;
mod fractional;
mod output;
mod select;
mod svg;
mod sweep;
mod validate;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use crate::config::ConfigFile;

#[derive(Debug, Parser)]
#[command(name = "qswitch", version, about)]
struct Cli {
    /// `key = value` file mirroring the flags; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    Sweep(sweep::SweepArgs),
    Classify(classify::ClassifyArgs),
    Validate(validate::ValidateArgs),
    Fractional(fractional::FractionalArgs),
}

fn run(cli: Cli) -> Result<bool> {
    let path = cli.config.as_deref();
    match cli.command {
        Command::Sweep(args) => sweep::run(args, &ConfigFile::load(path, sweep::KEYS)?).map(|_| true),
        Command::Classify(args) => classify::run(args, &ConfigFile::load(path, classify::KEYS)?).map(|_| true),
        Command::Validate(args) => validate::run(args, &ConfigFile::load(path, validate::KEYS)?),
        Command::Fractional(args) => fractional::run(args, &ConfigFile::load(path, fractional::KEYS)?).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
