mod commands;
mod config;
mod exit;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fuzzbl_core::Logic;

use crate::config::Config;

#[derive(Debug, Parser)]
#[command(name = "fuzzbl", version, about = "Fairness evaluation in basic fuzzy logic")]
#[command(arg_required_else_help = true)]
struct Cli {
    /// JSON config file; flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a formula under a valuation.
    Eval(commands::eval::EvalArgs),
    /// Measure discrimination between groups of a prediction CSV.
    Audit(commands::audit::AuditArgs),
    /// Discrimination values the standard form can generate for a given s.
    GenSpace(commands::fairness::GenSpaceArgs),
    /// Standard-form bias and fairness from s, e and f.
    Bias(commands::fairness::BiasArgs),
    /// Synthetic ROC sweep over the shape exponent c.
    RocSim(commands::roc::RocSimArgs),
    /// Hooker-Williams criterion as a Łukasiewicz truth value.
    Hw(commands::hw::HwArgs),
    /// Fit or query a regressor of stakeholder discrimination beliefs.
    #[command(subcommand)]
    Belief(commands::belief::BeliefCommand),
    /// Reduce a list of biases to one fairness value.
    Aggregate(commands::aggregate::AggregateArgs),
}

/// `--logic`, shared by most commands.
#[derive(Debug, Clone, Args)]
pub struct LogicArg {
    /// godel, product or lukasiewicz [default: lukasiewicz]
    #[arg(long, value_parser = parse_logic)]
    pub logic: Option<Logic>,
}

impl LogicArg {
    pub fn resolve(&self, config: &Config, command: &str) -> anyhow::Result<Logic> {
        config.pick(self.logic, command, "logic", Logic::Lukasiewicz)
    }
}

fn parse_logic(s: &str) -> Result<Logic, String> {
    s.parse().map_err(|e: fuzzbl_core::logic::UnknownLogic| e.to_string())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Eval(args) => commands::eval::run(args, &config),
        Command::Audit(args) => commands::audit::run(args, &config),
        Command::GenSpace(args) => commands::fairness::run_gen_space(args, &config),
        Command::Bias(args) => commands::fairness::run_bias(args, &config),
        Command::RocSim(args) => commands::roc::run(args, &config),
        Command::Hw(args) => commands::hw::run(args, &config),
        Command::Belief(cmd) => commands::belief::run(cmd, &config),
        Command::Aggregate(args) => commands::aggregate::run(args, &config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(exit::Exit::Usage.code()),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit::code_of(&err))
        }
    }
}
