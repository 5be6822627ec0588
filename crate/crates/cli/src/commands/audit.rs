use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use fuzzbl_core::discrimination::{
    cv, delta_measure, discrimination_truth, group_rates, prule, AuditDataset, GroupRates,
};
use fuzzbl_core::fairness::{FairnessInputs, FairnessReport};
use fuzzbl_core::TruthValue;
use serde::{Deserialize, Serialize};

use crate::commands::truth;
use crate::config::Config;
use crate::exit::Exit;
use crate::output::print_json;
use crate::LogicArg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// positive-rate ratio
    Prule,
    /// positive-rate difference
    Cv,
    /// false positive rates
    Fpr,
    /// false negative rates
    Fnr,
    /// true positive rates (equalized odds for y = 1)
    Eo,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// CSV with header prediction,label,group; label may be empty.
    #[arg(long, value_name = "PATH")]
    data: Option<PathBuf>,

    /// Group value whose members form S.
    #[arg(long, value_name = "VALUE")]
    protected: Option<String>,

    /// "complement" or a second group value forming S'.
    #[arg(long, value_name = "WHAT")]
    compare: Option<String>,

    #[arg(long, value_enum)]
    measure: Option<Measure>,

    /// Membership truth value s [default: share of S in the data].
    #[arg(long)]
    s: Option<f64>,

    #[command(flatten)]
    logic: LogicArg,
}

#[derive(Debug, Deserialize)]
struct Row {
    prediction: String,
    #[serde(default)]
    label: Option<String>,
    group: String,
}

fn parse_bit(text: &str) -> Option<bool> {
    match text.trim() {
        "1" | "true" => Some(true),
        "0" | "false" => Some(false),
        _ => None,
    }
}

struct Table {
    predictions: Vec<bool>,
    labels: Vec<Option<bool>>,
    groups: Vec<String>,
}

fn read_table(path: &Path) -> Result<Table> {
    let mut reader = csv::Reader::from_path(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut table = Table {
        predictions: vec![],
        labels: vec![],
        groups: vec![],
    };
    for (i, row) in reader.deserialize::<Row>().enumerate() {
        let line = i + 2;
        let row = row.with_context(|| format!("{}: malformed row {line}", path.display()))?;
        let p = parse_bit(&row.prediction).ok_or_else(|| anyhow!("line {line}: prediction must be 0 or 1"))?;
        let l = match row.label.as_deref().map(str::trim) {
            None | Some("") => None,
            Some(t) => Some(parse_bit(t).ok_or_else(|| anyhow!("line {line}: label must be 0, 1 or empty"))?),
        };
        table.predictions.push(p);
        table.labels.push(l);
        table.groups.push(row.group.trim().to_string());
    }
    if table.predictions.is_empty() {
        bail!("{} has no rows", path.display());
    }
    Ok(table)
}

#[derive(Serialize)]
struct GroupReport {
    name: String,
    #[serde(flatten)]
    rates: GroupRates,
}

#[derive(Serialize)]
struct AuditReport {
    measure: Measure,
    group: GroupReport,
    comparison: GroupReport,
    m: TruthValue,
    m_prime: TruthValue,
    /// The classical measure: prule, cv, or |m − m'|.
    measure_value: TruthValue,
    discrimination: TruthValue,
    s: TruthValue,
    f: TruthValue,
    #[serde(flatten)]
    report: FairnessReport,
}

fn property(rates: &GroupRates, measure: Measure, name: &str) -> Result<TruthValue> {
    let (value, what) = match measure {
        Measure::Prule | Measure::Cv => (Some(rates.positive_rate), "positive rate"),
        Measure::Fpr => (rates.fpr, "false positive rate (needs negative labels)"),
        Measure::Fnr => (rates.fnr, "false negative rate (needs positive labels)"),
        Measure::Eo => (rates.tpr, "true positive rate (needs positive labels)"),
    };
    value.ok_or_else(|| anyhow!("group {name:?} has no {what}"))
}

pub fn run(args: AuditArgs, config: &Config) -> Result<()> {
    const CMD: &str = "audit";
    let logic = args.logic.resolve(config, CMD)?;
    let path: PathBuf = config
        .maybe(args.data, CMD, "data")?
        .ok_or_else(|| anyhow!("--data is required"))
        .context(Exit::Usage)?;
    let protected: String = config
        .maybe(args.protected, CMD, "protected")?
        .ok_or_else(|| anyhow!("--protected is required"))
        .context(Exit::Usage)?;
    let compare = config.pick(args.compare, CMD, "compare", "complement".to_string())?;
    let measure = config.pick(args.measure, CMD, "measure", Measure::Prule)?;
    let s_flag: Option<f64> = config.maybe(args.s, CMD, "s")?;

    let table = read_table(&path).context(Exit::Data)?;
    let group: Vec<bool> = table.groups.iter().map(|g| *g == protected).collect();
    let (other_name, other): (String, Vec<bool>) = if compare == "complement" {
        (format!("not {protected}"), group.iter().map(|&g| !g).collect())
    } else {
        let other = table.groups.iter().map(|g| *g == compare).collect();
        (compare.clone(), other)
    };

    let data = || -> Result<_> {
        let ds = AuditDataset::new(table.predictions.clone(), table.labels.clone())?;
        let g = group_rates(&ds, &group).with_context(|| format!("group {protected:?}"))?;
        let o = group_rates(&ds, &other).with_context(|| format!("group {other_name:?}"))?;
        let m = property(&g, measure, &protected)?;
        let mp = property(&o, measure, &other_name)?;
        let measure_value = match measure {
            Measure::Prule => prule(m, mp).context("prule is undefined when a positive rate is 0")?,
            Measure::Cv => cv(m, mp),
            _ => delta_measure(m, mp),
        };
        Ok((g, o, m, mp, measure_value))
    };
    let (g, o, m, mp, measure_value) = data().context(Exit::Data)?;

    let s = match s_flag {
        Some(v) => truth("s", v)?,
        None => TruthValue::new(g.count as f64 / table.predictions.len() as f64)?,
    };
    let e = discrimination_truth(logic, m, mp);
    let f = TruthValue::ONE;
    let report = FairnessReport::compute(logic, FairnessInputs { s, e, f });
    print_json(&AuditReport {
        measure,
        group: GroupReport {
            name: protected,
            rates: g,
        },
        comparison: GroupReport {
            name: other_name,
            rates: o,
        },
        m,
        m_prime: mp,
        measure_value,
        discrimination: e,
        s,
        f,
        report,
    })
}
