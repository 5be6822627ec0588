use anyhow::{anyhow, Context, Result};
use clap::Args;
use fuzzbl_core::aggregation::{fair_conjunction, rawl, unbias, BiasVector};
use fuzzbl_core::{Logic, TruthValue};
use serde::Serialize;

use crate::config::Config;
use crate::exit::Exit;
use crate::output::print_json;
use crate::LogicArg;

#[derive(Debug, Args)]
pub struct AggregateArgs {
    /// JSON array of bias truth values, e.g. "[0.1, 0.3]".
    #[arg(long)]
    biases: Option<String>,

    #[command(flatten)]
    logic: LogicArg,
}

#[derive(Serialize)]
struct Aggregates {
    logic: Logic,
    count: usize,
    rawl: TruthValue,
    unbias: TruthValue,
    fair: TruthValue,
}

pub fn run(args: AggregateArgs, config: &Config) -> Result<()> {
    let logic = args.logic.resolve(config, "aggregate")?;
    let biases: Vec<TruthValue> = match args.biases {
        Some(text) => serde_json::from_str(&text)
            .context("--biases must be a JSON array of numbers in [0, 1]")
            .context(Exit::Data)?,
        None => config
            .get("aggregate", "biases")?
            .ok_or_else(|| anyhow!("--biases is required"))
            .context(Exit::Usage)?,
    };
    let count = biases.len();
    let v = BiasVector::new(biases).map_err(anyhow::Error::new).context(Exit::Data)?;
    print_json(&Aggregates {
        logic,
        count,
        rawl: rawl(&v),
        unbias: unbias(logic, &v),
        fair: fair_conjunction(logic, &v),
    })
}
