//! Command-line front end for the `rovib` library.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod model;

use std::collections::BTreeMap;

use args::{Cli, Command};
use config::RunConfig;
use error::CliResult;

pub fn run(cli: &Cli) -> CliResult<()> {
    let cmd = &cli.command;
    let common = cmd.common();
    let file = match &common.config {
        Some(p) => config::load(p)?,
        None => BTreeMap::new(),
    };
    let settings = config::merge(cmd.name(), file, cmd.flag_values())?;
    let cfg = RunConfig::from_settings(&settings)?;
    if let Some(p) = &common.save_config {
        std::fs::write(p, config::render(cmd.name(), &settings))?;
    }
    match cmd {
        Command::Energy { .. } => commands::energy::run(&cfg),
        Command::ApproxError { .. } => commands::approx_error::run(&cfg),
        Command::Sweep { .. } => commands::sweep::run(&cfg),
        Command::Verify { .. } => commands::verify::run(&cfg),
        Command::Wavefunction { .. } => commands::wavefunction::run(&cfg),
    }
}
