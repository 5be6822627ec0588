use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use fuzzbl_core::roc::{c_grid, sweep_experiment, DEFAULT_SAMPLES};

use crate::config::Config;
use crate::exit::Exit;
use crate::output::{cell, write_csv};

#[derive(Debug, Args)]
pub struct RocSimArgs {
    /// Smallest shape exponent [default: 1]
    #[arg(long)]
    c_min: Option<f64>,

    /// Largest shape exponent [default: 32]
    #[arg(long)]
    c_max: Option<f64>,

    /// Number of exponents, spaced geometrically [default: 20]
    #[arg(long)]
    steps: Option<usize>,

    /// Samples per family [default: 100000]
    #[arg(long)]
    n: Option<usize>,

    /// [default: 0]
    #[arg(long)]
    seed: Option<u64>,

    /// Output CSV; stdout when absent.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

pub const HEADER: [&str; 6] = ["c", "min_auc", "auc_diff", "abroca", "rbroca", "one_minus_min_auc"];

pub fn run(args: RocSimArgs, config: &Config) -> Result<()> {
    const CMD: &str = "roc-sim";
    let c_min = config.pick(args.c_min, CMD, "c-min", 1.0)?;
    let c_max = config.pick(args.c_max, CMD, "c-max", 32.0)?;
    let steps = config.pick(args.steps, CMD, "steps", 20)?;
    let n = config.pick(args.n, CMD, "n", DEFAULT_SAMPLES)?;
    let seed = config.pick(args.seed, CMD, "seed", 0)?;
    let out: Option<PathBuf> = config.maybe(args.out, CMD, "out")?;

    let rows = sweep_experiment(&c_grid(c_min, c_max, steps), n, seed)
        .map_err(anyhow::Error::new)
        .context(Exit::Usage)?;
    write_csv(
        out.as_deref(),
        &HEADER,
        rows.iter().map(|r| {
            [r.c, r.min_auc, r.auc_diff, r.abroca, r.rbroca, r.one_minus_min_auc]
                .map(cell)
                .to_vec()
        }),
    )
}
