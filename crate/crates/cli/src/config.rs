//! Optional JSON config file. Top-level keys apply to every command; a key
//! named after a command holds overrides for that command only:
//!
//! ```json
//! { "logic": "product", "seed": 7, "roc-sim": { "n": 20000, "steps": 10 } }
//! ```
//!
//! Precedence is flag > command section > top level > built-in default.

use std::path::Path;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde_json::{Map, Value};

use crate::exit::Exit;

#[derive(Debug, Default)]
pub struct Config {
    root: Map<String, Value>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))
            .context(Exit::Data)?;
        match serde_json::from_str(&text) {
            Ok(Value::Object(root)) => Ok(Config { root }),
            Ok(_) => Err(anyhow::anyhow!("config {} is not a JSON object", path.display())).context(Exit::Usage),
            Err(e) => Err(e)
                .with_context(|| format!("config {} is not valid JSON", path.display()))
                .context(Exit::Usage),
        }
    }

    fn lookup(&self, command: &str, key: &str) -> Option<&Value> {
        self.root
            .get(command)
            .and_then(|section| section.get(key))
            .or_else(|| self.root.get(key).filter(|v| !v.is_object()))
    }

    pub fn get<T: DeserializeOwned>(&self, command: &str, key: &str) -> Result<Option<T>> {
        self.lookup(command, key)
            .map(|v| {
                serde_json::from_value(v.clone())
                    .with_context(|| format!("config key {key:?} has the wrong type"))
                    .context(Exit::Usage)
            })
            .transpose()
    }

    /// Resolves one setting.
    pub fn pick<T: DeserializeOwned>(&self, flag: Option<T>, command: &str, key: &str, default: T) -> Result<T> {
        match flag {
            Some(v) => Ok(v),
            None => Ok(self.get(command, key)?.unwrap_or(default)),
        }
    }

    /// Like `pick` with no default.
    pub fn maybe<T: DeserializeOwned>(&self, flag: Option<T>, command: &str, key: &str) -> Result<Option<T>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(command, key),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(text: &str) -> Config {
        let Value::Object(root) = serde_json::from_str(text).unwrap() else {
            panic!("not an object")
        };
        Config { root }
    }

    #[test]
    fn precedence() {
        let c = config(r#"{"seed": 1, "n": 5, "roc-sim": {"seed": 2}}"#);
        assert_eq!(c.pick(Some(3u64), "roc-sim", "seed", 0).unwrap(), 3);
        assert_eq!(c.pick(None, "roc-sim", "seed", 0u64).unwrap(), 2);
        assert_eq!(c.pick(None, "hw", "seed", 0u64).unwrap(), 1);
        assert_eq!(c.pick(None, "hw", "missing", 9u64).unwrap(), 9);
        assert_eq!(c.pick(None, "roc-sim", "n", 0usize).unwrap(), 5);
    }

    #[test]
    fn wrong_type_is_usage_error() {
        let c = config(r#"{"seed": "x"}"#);
        let err = c.pick(None, "hw", "seed", 0u64).unwrap_err();
        assert_eq!(crate::exit::code_of(&err), 1);
    }
}
