use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::Args;
use fuzzbl_core::hooker_williams::{
    bias_hw_truths, fair_hw_truth, hw_contour, hw_score, hw_truth, min_max_scale, standard_form_feasible,
    UtilityProfile,
};
use fuzzbl_core::TruthValue;
use serde::Serialize;

use crate::commands::number_list;
use crate::config::Config;
use crate::exit::Exit;
use crate::output::{cell, print_json, write_csv};

#[derive(Debug, Args)]
pub struct HwArgs {
    /// Comma-separated utilities, e.g. 0.3,0.3
    #[arg(long, value_name = "LIST")]
    utilities: Option<String>,

    /// Judgement parameter δ.
    #[arg(long)]
    delta: Option<f64>,

    /// Also report the strengthened criterion FairHW.
    #[arg(long)]
    fair: bool,

    /// Min-max scale the utilities into [0, 1] first.
    #[arg(long)]
    scale: bool,

    /// Write a two-person N x N grid of HW and FairHW instead.
    #[arg(long, value_name = "N")]
    contour: Option<usize>,

    /// Contour CSV path; stdout when absent.
    #[arg(long, value_name = "PATH", requires = "contour")]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct HwReport {
    utilities: Vec<f64>,
    delta: TruthValue,
    hw: f64,
    hw_in_unit_interval: bool,
    hw_truth: TruthValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    fairhw_truth: Option<TruthValue>,
    bias: Vec<TruthValue>,
    standard_form_feasible: bool,
}

pub const CONTOUR_HEADER: [&str; 4] = ["u1", "u2", "hw", "fairhw"];

pub fn run(args: HwArgs, config: &Config) -> Result<()> {
    const CMD: &str = "hw";
    let delta = config
        .maybe(args.delta, CMD, "delta")?
        .ok_or_else(|| anyhow!("--delta is required"))
        .context(Exit::Usage)?;

    if let Some(steps) = config.maybe(args.contour, CMD, "contour")? {
        let out: Option<PathBuf> = config.maybe(args.out, CMD, "out")?;
        let rows = hw_contour(steps, delta).map_err(anyhow::Error::new).context(Exit::Usage)?;
        return write_csv(
            out.as_deref(),
            &CONTOUR_HEADER,
            rows.iter().map(|r| [r.u1, r.u2, r.hw, r.fairhw].map(cell).to_vec()),
        );
    }

    let raw: Vec<f64> = match args.utilities {
        Some(text) => number_list(&text)
            .map_err(|e| anyhow!("--utilities: {e}"))
            .context(Exit::Usage)?,
        None => config
            .get(CMD, "utilities")?
            .ok_or_else(|| anyhow!("--utilities is required"))
            .context(Exit::Usage)?,
    };
    let scale = args.scale || config.get(CMD, "scale")?.unwrap_or(false);
    let fair = args.fair || config.get(CMD, "fair")?.unwrap_or(false);
    let utilities = if scale { min_max_scale(&raw) } else { raw };
    let profile = UtilityProfile::from_f64(&utilities, delta)
        .map_err(anyhow::Error::new)
        .context("utilities and δ + u_min must lie in [0, 1]; try --scale")
        .context(Exit::Data)?;

    let score = hw_score(&profile);
    print_json(&HwReport {
        utilities,
        delta: profile.delta(),
        hw: score.value,
        hw_in_unit_interval: score.in_unit_interval,
        hw_truth: hw_truth(&profile),
        fairhw_truth: fair.then(|| fair_hw_truth(&profile)),
        bias: bias_hw_truths(&profile),
        standard_form_feasible: standard_form_feasible(&profile),
    })
}
