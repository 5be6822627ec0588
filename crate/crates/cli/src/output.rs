use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{Number, Value};

use crate::exit::Exit;

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn number(x: f64) -> Value {
    let r = round12(x);
    if r.fract() == 0.0 && r.abs() < 1e15 {
        Value::from(r as i64)
    } else {
        Number::from_f64(r).map_or(Value::Null, Value::Number)
    }
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) => match (n.is_f64(), n.as_f64()) {
            (true, Some(x)) => number(x),
            _ => Value::Number(n),
        },
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

/// Serialises with every float rounded to 12 significant digits.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).context("serialising output")?;
    Ok(serde_json::to_string_pretty(&round_value(v))? + "\n")
}

pub fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let text = to_json(value)?;
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

/// CSV cell for a float.
pub fn cell(x: f64) -> String {
    round12(x).to_string()
}

/// Writes rows as CSV with `\n` line endings to `out`, or stdout.
pub fn write_csv(out: Option<&Path>, header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Result<()> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(
            std::fs::File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))
                .context(Exit::Data)?,
        ),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
