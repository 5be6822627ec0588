pub mod aggregate;
pub mod audit;
pub mod belief;
pub mod eval;
pub mod fairness;
pub mod hw;
pub mod roc;

use anyhow::{Context, Result};
use fuzzbl_core::TruthValue;

use crate::exit::Exit;

/// A truth-valued flag, rejected as a usage error when outside `[0, 1]`.
pub fn truth(name: &str, value: f64) -> Result<TruthValue> {
    TruthValue::new(value)
        .with_context(|| format!("--{name}"))
        .context(Exit::Usage)
}

/// Comma-separated list of numbers.
pub fn number_list(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}
