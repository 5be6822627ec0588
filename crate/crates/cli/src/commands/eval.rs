use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use fuzzbl_core::{evaluate, parse, TruthValue, Valuation};
use serde::Serialize;

use crate::config::Config;
use crate::exit::Exit;
use crate::output::print_json;
use crate::LogicArg;

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Formula text, e.g. "S & (S -> E)".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    formula: Option<String>,

    /// Read the formula from a file instead.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Valuation JSON with "scalars", "families" and "domains".
    #[arg(long, value_name = "PATH")]
    valuation: Option<PathBuf>,

    /// Scalar predicate value, NAME=VALUE; repeatable, overrides the file.
    #[arg(long = "set", value_name = "NAME=VALUE", value_parser = parse_binding)]
    set: Vec<(String, f64)>,

    #[command(flatten)]
    logic: LogicArg,
}

fn parse_binding(text: &str) -> Result<(String, f64), String> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got {text:?}"))?;
    let value = value.trim().parse::<f64>().map_err(|e| format!("{value:?}: {e}"))?;
    Ok((name.trim().to_string(), value))
}

#[derive(Serialize)]
struct Truth {
    truth: TruthValue,
}

pub fn run(args: EvalArgs, config: &Config) -> Result<()> {
    let logic = args.logic.resolve(config, "eval")?;
    let source = match (&args.formula, &args.file) {
        (Some(text), _) => text.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))
            .context(Exit::Data)?,
        (None, None) => unreachable!("clap requires one of them"),
    };
    let expr = parse(&source).map_err(anyhow::Error::new).context(Exit::Parse)?;

    let mut valuation = match config.maybe(args.valuation, "eval", "valuation")? {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("cannot read {}", path.display()))
                .context(Exit::Data)?;
            Valuation::from_json(&text)
                .with_context(|| format!("bad valuation {}", path.display()))
                .context(Exit::Valuation)?
        }
        None => Valuation::new(),
    };
    for (name, value) in args.set {
        let v = TruthValue::new(value)
            .with_context(|| format!("--set {name}"))
            .context(Exit::Valuation)?;
        valuation.set(name, v);
    }

    let truth = evaluate(&expr, logic, &valuation).map_err(anyhow::Error::new).context(Exit::Valuation)?;
    print_json(&Truth { truth })
}
