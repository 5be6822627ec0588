//! Browser bindings for the demo page in `www/`. Every function returns a
//! JSON string; failures come back as `{"error": "..."}`.

use fuzzbl_core::fairness::{generation_space, FairnessInputs, FairnessReport};
use fuzzbl_core::hooker_williams::hw_contour;
use fuzzbl_core::{evaluate, parse, Logic, TruthValue, Valuation};
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn logic(name: &str) -> Result<Logic, String> {
    name.parse().map_err(|e: fuzzbl_core::logic::UnknownLogic| e.to_string())
}

/// Evaluates `formula` under `logic` with a valuation document
/// (`{"scalars": {...}, "families": {...}, "domains": {...}}`).
#[wasm_bindgen]
pub fn eval_formula(formula: &str, logic_name: &str, valuation_json: &str) -> String {
    let run = || -> Result<f64, String> {
        let logic = logic(logic_name)?;
        let expr = parse(formula).map_err(|e| e.to_string())?;
        let val = if valuation_json.trim().is_empty() {
            Valuation::new()
        } else {
            Valuation::from_json(valuation_json).map_err(|e| format!("valuation: {e}"))?
        };
        evaluate(&expr, logic, &val).map(TruthValue::get).map_err(|e| e.to_string())
    };
    match run() {
        Ok(truth) => json!({ "truth": truth, "printed": parse(formula).map(|e| e.to_string()).ok() }).to_string(),
        Err(e) => error(e),
    }
}

/// Standard-form report plus the generation space for `s`.
#[wasm_bindgen]
pub fn fairness_report(logic_name: &str, s: f64, e: f64, f: f64) -> String {
    let run = || -> Result<String, String> {
        let logic = logic(logic_name)?;
        let tv = |name: &str, x: f64| TruthValue::new(x).map_err(|err| format!("{name}: {err}"));
        let (s, e, f) = (tv("s", s)?, tv("e", e)?, tv("f", f)?);
        let report = FairnessReport::compute(logic, FairnessInputs { s, e, f });
        Ok(json!({ "report": report, "generation_space": generation_space(logic, s) }).to_string())
    };
    run().unwrap_or_else(error)
}

/// Two-person HW and FairHW grid, rows ordered with `u1` varying slowest.
#[wasm_bindgen]
pub fn hw_grid(steps: usize, delta: f64) -> String {
    match hw_contour(steps, delta) {
        Ok(rows) => {
            let hw: Vec<f64> = rows.iter().map(|r| r.hw).collect();
            let fair: Vec<f64> = rows.iter().map(|r| r.fairhw).collect();
            json!({ "steps": steps, "hw": hw, "fairhw": fair }).to_string()
        }
        Err(e) => error(e),
    }
}
