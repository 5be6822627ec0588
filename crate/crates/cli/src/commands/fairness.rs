use anyhow::{anyhow, Context, Result};
use clap::Args;
use fuzzbl_core::fairness::{f_gen, generation_space, infimum_d, FairnessInputs, FairnessReport};
use fuzzbl_core::TruthValue;
use serde::Serialize;

use crate::commands::truth;
use crate::config::Config;
use crate::exit::Exit;
use crate::output::print_json;
use crate::LogicArg;

#[derive(Debug, Args)]
pub struct GenSpaceArgs {
    /// Group membership truth value.
    #[arg(long)]
    s: Option<f64>,

    #[command(flatten)]
    logic: LogicArg,
}

#[derive(Debug, Args)]
pub struct BiasArgs {
    /// Group membership truth value.
    #[arg(long)]
    s: Option<f64>,

    /// Discrimination truth value.
    #[arg(long)]
    e: Option<f64>,

    /// Free expression truth value [default: 1, the worst case].
    #[arg(long)]
    f: Option<f64>,

    #[command(flatten)]
    logic: LogicArg,
}

fn required(config: &Config, flag: Option<f64>, command: &str, key: &str) -> Result<TruthValue> {
    let v = config
        .maybe(flag, command, key)?
        .ok_or_else(|| anyhow!("--{key} is required"))
        .context(Exit::Usage)?;
    truth(key, v)
}

pub fn run_gen_space(args: GenSpaceArgs, config: &Config) -> Result<()> {
    let logic = args.logic.resolve(config, "gen-space")?;
    let s = required(config, args.s, "gen-space", "s")?;
    print_json(&generation_space(logic, s))
}

#[derive(Serialize)]
struct BiasReport {
    s: TruthValue,
    e: TruthValue,
    f: TruthValue,
    #[serde(flatten)]
    report: FairnessReport,
    /// Smallest d with s ⋆ d ≥ s ⋆ e.
    infimum_d: TruthValue,
    f_gen: TruthValue,
}

pub fn run_bias(args: BiasArgs, config: &Config) -> Result<()> {
    const CMD: &str = "bias";
    let logic = args.logic.resolve(config, CMD)?;
    let s = required(config, args.s, CMD, "s")?;
    let e = required(config, args.e, CMD, "e")?;
    let f = truth("f", config.pick(args.f, CMD, "f", 1.0)?)?;
    print_json(&BiasReport {
        s,
        e,
        f,
        report: FairnessReport::compute(logic, FairnessInputs { s, e, f }),
        infimum_d: infimum_d(logic, s, e),
        f_gen: f_gen(logic, s, e),
    })
}
