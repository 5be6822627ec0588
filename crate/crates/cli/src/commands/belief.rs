use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Subcommand};
use fuzzbl_core::belief::{
    predict_discrimination, train_belief_model, validate_fit, BeliefExample, BeliefModel, FitCheck,
    TrainConfig, TrainingSummary,
};
use fuzzbl_core::TruthValue;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::exit::Exit;
use crate::output::print_json;

#[derive(Debug, Subcommand)]
pub enum BeliefCommand {
    /// Fit a model to a belief CSV (prule,cv,discrimination[,max_deviation]).
    Train(TrainArgs),
    /// Predict the discrimination truth value for measured prule and cv.
    Predict(PredictArgs),
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,

    /// Model JSON to write.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// [default: 0.001]
    #[arg(long)]
    learning_rate: Option<f64>,

    /// Stop once an epoch lowers the loss by less than this [default: 1e-6]
    #[arg(long)]
    tolerance: Option<f64>,

    /// [default: 100000]
    #[arg(long)]
    max_epochs: Option<usize>,

    /// [default: 0]
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    #[arg(long, value_name = "PATH")]
    model: Option<PathBuf>,

    #[arg(long)]
    prule: f64,

    #[arg(long)]
    cv: f64,
}

#[derive(Debug, Deserialize)]
struct Row {
    prule: f64,
    cv: f64,
    discrimination: f64,
    #[serde(default)]
    max_deviation: Option<f64>,
}

fn read_examples(path: &Path) -> Result<Vec<BeliefExample>> {
    let mut reader = csv::Reader::from_path(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut out = Vec::new();
    for (i, row) in reader.deserialize::<Row>().enumerate() {
        let line = i + 2;
        let row: Row = row.with_context(|| format!("{}: malformed row {line}", path.display()))?;
        let target = TruthValue::new(row.discrimination).with_context(|| format!("line {line}: discrimination"))?;
        let max_deviation = row
            .max_deviation
            .map(TruthValue::new)
            .transpose()
            .with_context(|| format!("line {line}: max_deviation"))?;
        out.push(BeliefExample {
            max_deviation,
            ..BeliefExample::from_measures(row.prule, row.cv, target)
        });
    }
    if out.is_empty() {
        bail!("{} has no rows", path.display());
    }
    Ok(out)
}

#[derive(Serialize)]
struct TrainReport<'a> {
    examples: usize,
    training: &'a TrainingSummary,
    fit: Vec<FitCheck>,
    all_within_max_deviation: bool,
}

#[derive(Serialize)]
struct Prediction {
    prule: f64,
    cv: f64,
    discrimination: TruthValue,
}

pub fn run(cmd: BeliefCommand, config: &Config) -> Result<()> {
    match cmd {
        BeliefCommand::Train(args) => train(args, config),
        BeliefCommand::Predict(args) => predict(args, config),
    }
}

fn train(args: TrainArgs, config: &Config) -> Result<()> {
    const CMD: &str = "belief";
    let defaults = TrainConfig::default();
    let input: PathBuf = config
        .maybe(args.input, CMD, "in")?
        .ok_or_else(|| anyhow!("--in is required"))
        .context(Exit::Usage)?;
    let out: Option<PathBuf> = config.maybe(args.out, CMD, "out")?;
    let cfg = TrainConfig {
        learning_rate: config.pick(args.learning_rate, CMD, "learning-rate", defaults.learning_rate)?,
        tolerance: config.pick(args.tolerance, CMD, "tolerance", defaults.tolerance)?,
        max_epochs: config.pick(args.max_epochs, CMD, "max-epochs", defaults.max_epochs)?,
        seed: config.pick(args.seed, CMD, "seed", defaults.seed)?,
    };
    let examples = read_examples(&input).context(Exit::Data)?;
    let model = train_belief_model(&examples, &cfg).map_err(anyhow::Error::new).context(Exit::Data)?;
    if let Some(path) = &out {
        std::fs::write(path, model.to_json() + "\n")
            .with_context(|| format!("cannot write {}", path.display()))
            .context(Exit::Data)?;
    }
    let fit = validate_fit(&model, &examples)?;
    print_json(&TrainReport {
        examples: examples.len(),
        training: &model.training,
        all_within_max_deviation: fit.iter().all(|f| f.accepted),
        fit,
    })
}

fn predict(args: PredictArgs, config: &Config) -> Result<()> {
    let path: PathBuf = config
        .maybe(args.model, "belief", "model")?
        .ok_or_else(|| anyhow!("--model is required"))
        .context(Exit::Usage)?;
    let load = || -> Result<BeliefModel> {
        let text = std::fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
        BeliefModel::from_json(&text).with_context(|| format!("{} is not a belief model", path.display()))
    };
    let model = load().context(Exit::Data)?;
    let features = BeliefExample::from_measures(args.prule, args.cv, TruthValue::ZERO).features;
    let discrimination = predict_discrimination(&model, &features)
        .map_err(anyhow::Error::new)
        .context(Exit::Data)?;
    print_json(&Prediction {
        prule: args.prule,
        cv: args.cv,
        discrimination,
    })
}
