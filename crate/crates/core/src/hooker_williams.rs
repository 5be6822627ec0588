//! Hooker–Williams criterion and its Łukasiewicz truth-value forms.
//!
//! The numeric score is `hw = −δ + Σᵢ max{δ + u_min, uᵢ}`. Under Łukasiewicz
//! logic, with per-individual bias
//! `BiasHWᵢ ≜ (!Δ & !U_min) ^ !Uᵢ`, the criterion reads
//! `HW ≜ !Δ & !(&ᵢ BiasHWᵢ)` and its strengthened variant
//! `FairHW ≜ !((&ᵢ !BiasHWᵢ) -> Δ)`.
//!
//! Both truth values are obtained by building the formula and running it
//! through the expression evaluator.

use serde::Serialize;
use thiserror::Error;

use crate::expr::{evaluate, Expr, Valuation};
use crate::logic::{Logic, TruthValue};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProfileError {
    #[error("utility profile is empty")]
    Empty,
    #[error("δ + u_min = {0} exceeds 1")]
    ScaleViolated(f64),
    #[error("utility {0} is not finite")]
    NotFinite(f64),
}

/// Utilities scaled into `[0, 1]` and the judgement parameter δ.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityProfile {
    utilities: Vec<TruthValue>,
    delta: TruthValue,
}

impl UtilityProfile {
    pub fn new(utilities: Vec<TruthValue>, delta: TruthValue) -> Result<Self, ProfileError> {
        if utilities.is_empty() {
            return Err(ProfileError::Empty);
        }
        let profile = UtilityProfile { utilities, delta };
        let top = profile.delta.get() + profile.u_min();
        if top > 1.0 + crate::logic::TRUTH_TOLERANCE {
            return Err(ProfileError::ScaleViolated(top));
        }
        Ok(profile)
    }

    /// Builds a profile from raw f64 utilities.
    pub fn from_f64(utilities: &[f64], delta: f64) -> Result<Self, ProfileError> {
        let utilities = utilities
            .iter()
            .map(|&u| TruthValue::new(u).map_err(|_| ProfileError::NotFinite(u)))
            .collect::<Result<Vec<_>, _>>()?;
        let delta = TruthValue::new(delta).map_err(|_| ProfileError::NotFinite(delta))?;
        Self::new(utilities, delta)
    }

    pub fn utilities(&self) -> &[TruthValue] {
        &self.utilities
    }

    pub fn delta(&self) -> TruthValue {
        self.delta
    }

    pub fn u_min(&self) -> f64 {
        self.utilities
            .iter()
            .map(|u| u.get())
            .fold(f64::INFINITY, f64::min)
    }

    fn valuation(&self) -> Valuation {
        let mut val = Valuation::new()
            .with("Delta", self.delta)
            .with("Umin", TruthValue::saturate(self.u_min()));
        for (i, &u) in self.utilities.iter().enumerate() {
            val.set(utility_name(i), u);
        }
        val
    }
}

/// Min–max scaling of raw utilities into `[0, 1]`; a constant vector maps
/// to all ones.
pub fn min_max_scale(raw: &[f64]) -> Vec<f64> {
    let lo = raw.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = raw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi > lo {
        raw.iter().map(|&u| (u - lo) / (hi - lo)).collect()
    } else {
        vec![1.0; raw.len()]
    }
}

fn utility_name(i: usize) -> String {
    format!("U{i}")
}

/// Result of the numeric score with a flag for the scaling assumption.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HwScore {
    pub value: f64,
    /// `false` when the score leaves `[0, 1]`.
    pub in_unit_interval: bool,
}

/// `−δ + Σᵢ max{δ + u_min, uᵢ}`.
pub fn hw_score(profile: &UtilityProfile) -> HwScore {
    let delta = profile.delta.get();
    let floor = delta + profile.u_min();
    let value = -delta + profile.utilities.iter().map(|u| u.get().max(floor)).sum::<f64>();
    HwScore {
        value,
        in_unit_interval: (0.0..=1.0).contains(&value),
    }
}

/// `(n − 1)δ + n·u_min + Σᵢ max{0, uᵢ − u_min − δ}`.
pub fn hw_score_expanded(profile: &UtilityProfile) -> f64 {
    let n = profile.utilities.len() as f64;
    let delta = profile.delta.get();
    let u_min = profile.u_min();
    (n - 1.0) * delta
        + n * u_min
        + profile
            .utilities
            .iter()
            .map(|u| (u.get() - u_min - delta).max(0.0))
            .sum::<f64>()
}

/// `BiasHWᵢ ≜ (!Δ & !U_min) ^ !Uᵢ`.
pub fn bias_hw_expr(i: usize) -> Expr {
    Expr::pred("Delta")
        .strong_neg()
        .and(Expr::pred("Umin").strong_neg())
        .meet(Expr::pred(utility_name(i)).strong_neg())
}

/// `Eᵢ & Sᵢ & (Eᵢ -> Sᵢ)` with `Eᵢ = !Δ & !U_min` and `Sᵢ = !Uᵢ`.
pub fn bias_hw_standard_form_expr(i: usize) -> Expr {
    let e = Expr::pred("Delta").strong_neg().and(Expr::pred("Umin").strong_neg());
    let s = Expr::pred(utility_name(i)).strong_neg();
    e.clone().and(s.clone()).and(e.implies(s))
}

pub fn hw_expr(n: usize) -> Expr {
    let conj = Expr::and_all((0..n).map(bias_hw_expr)).expect("n ≥ 1");
    Expr::pred("Delta").strong_neg().and(conj.strong_neg())
}

pub fn fair_hw_expr(n: usize) -> Expr {
    let conj = Expr::and_all((0..n).map(|i| bias_hw_expr(i).strong_neg())).expect("n ≥ 1");
    conj.implies(Expr::pred("Delta")).strong_neg()
}

fn eval_lukasiewicz(expr: &Expr, profile: &UtilityProfile) -> TruthValue {
    evaluate(expr, Logic::Lukasiewicz, &profile.valuation())
        .expect("profile valuation binds every predicate of the formula")
}

/// Łukasiewicz truth value of `HW`.
pub fn hw_truth(profile: &UtilityProfile) -> TruthValue {
    eval_lukasiewicz(&hw_expr(profile.utilities.len()), profile)
}

/// Łukasiewicz truth value of `FairHW`.
pub fn fair_hw_truth(profile: &UtilityProfile) -> TruthValue {
    eval_lukasiewicz(&fair_hw_expr(profile.utilities.len()), profile)
}

/// Per-individual bias `BiasHWᵢ`.
pub fn bias_hw_truths(profile: &UtilityProfile) -> Vec<TruthValue> {
    (0..profile.utilities.len())
        .map(|i| eval_lukasiewicz(&bias_hw_expr(i), profile))
        .collect()
}

/// Per-individual bias through the decomposition `Eᵢ & Sᵢ & F(Sᵢ, Eᵢ)`.
pub fn bias_hw_standard_form_truths(profile: &UtilityProfile) -> Vec<TruthValue> {
    (0..profile.utilities.len())
        .map(|i| eval_lukasiewicz(&bias_hw_standard_form_expr(i), profile))
        .collect()
}

/// `u_min ≥ (1 − δ) / 2`.
pub fn standard_form_feasible(profile: &UtilityProfile) -> bool {
    profile.u_min() >= (1.0 - profile.delta.get()) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContourRow {
    pub u1: f64,
    pub u2: f64,
    pub hw: f64,
    pub fairhw: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContourError {
    #[error("contour grid needs at least 2 steps per axis, got {0}")]
    TooFewSteps(usize),
    #[error("δ = {0} is not a truth value")]
    BadDelta(f64),
}

/// `HW` and `FairHW` for two individuals over a uniform `steps × steps`
/// grid of `[0, 1]²`, `u1` varying slowest. Grid points where `δ + u_min`
/// exceeds 1 are evaluated anyway (the formulas stay in `[0, 1]`).
pub fn hw_contour(steps: usize, delta: f64) -> Result<Vec<ContourRow>, ContourError> {
    if steps < 2 {
        return Err(ContourError::TooFewSteps(steps));
    }
    let delta = TruthValue::new(delta).map_err(|_| ContourError::BadDelta(delta))?;
    let hw = hw_expr(2);
    let fair = fair_hw_expr(2);
    let axis: Vec<f64> = (0..steps).map(|i| i as f64 / (steps - 1) as f64).collect();
    let mut rows = Vec::with_capacity(steps * steps);
    for &u1 in &axis {
        for &u2 in &axis {
            let profile = UtilityProfile {
                utilities: vec![TruthValue::saturate(u1), TruthValue::saturate(u2)],
                delta,
            };
            rows.push(ContourRow {
                u1,
                u2,
                hw: eval_lukasiewicz(&hw, &profile).get(),
                fairhw: eval_lukasiewicz(&fair, &profile).get(),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(u: &[f64], delta: f64) -> UtilityProfile {
        UtilityProfile::from_f64(u, delta).unwrap()
    }

    #[test]
    fn score_examples() {
        assert!((hw_score(&profile(&[0.3, 0.3], 0.2)).value - 0.8).abs() < 1e-12);
        assert_eq!(hw_score(&profile(&[0.42], 0.0)).value, 0.42);
        assert!((hw_score(&profile(&[0.3, 0.6], 0.2)).value - 0.9).abs() < 1e-12);
        let big = hw_score(&profile(&[0.9, 0.9, 0.9], 0.1));
        assert!(!big.in_unit_interval);
    }

    #[test]
    fn truth_examples() {
        assert!((hw_truth(&profile(&[0.3, 0.3], 0.2)).get() - 0.8).abs() < 1e-12);
        assert_eq!(hw_truth(&profile(&[1.0, 1.0, 1.0], 0.0)).get(), 1.0);
        // Σ max{δ+u_min, uᵢ} = 1.1 saturates the inner negation.
        assert!((hw_truth(&profile(&[0.3, 0.6], 0.2)).get() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn fair_examples() {
        assert!((fair_hw_truth(&profile(&[0.8, 0.8], 0.2)).get() - 0.8).abs() < 1e-12);
        assert!(fair_hw_truth(&profile(&[0.2, 0.2], 0.2)).get().abs() < 1e-12);
        assert_eq!(fair_hw_truth(&profile(&[0.0, 0.0], 1.0)).get(), 0.0);
    }

    #[test]
    fn feasibility_bound() {
        assert!(standard_form_feasible(&profile(&[0.5, 0.6], 0.2)));
        assert!(!standard_form_feasible(&profile(&[0.3, 0.3], 0.2)));
        assert!(standard_form_feasible(&profile(&[0.0, 0.0], 1.0)));
    }

    #[test]
    fn profile_validation() {
        assert!(matches!(
            UtilityProfile::from_f64(&[], 0.2),
            Err(ProfileError::Empty)
        ));
        assert!(matches!(
            UtilityProfile::from_f64(&[0.9, 0.95], 0.2),
            Err(ProfileError::ScaleViolated(_))
        ));
    }

    #[test]
    fn contour_grid() {
        let rows = hw_contour(11, 0.2).unwrap();
        assert_eq!(rows.len(), 121);
        let at = |u1: f64, u2: f64| {
            *rows
                .iter()
                .find(|r| (r.u1 - u1).abs() < 1e-9 && (r.u2 - u2).abs() < 1e-9)
                .unwrap()
        };
        assert!((at(0.8, 0.8).fairhw - 0.8).abs() < 1e-12);
        let low = at(0.2, 0.2);
        assert!(low.fairhw.abs() < 1e-12);
        assert!(low.hw >= 0.6 - 1e-12);
        assert!(matches!(hw_contour(1, 0.2), Err(ContourError::TooFewSteps(1))));
    }

    #[test]
    fn scaling() {
        assert_eq!(min_max_scale(&[2.0, 4.0, 3.0]), vec![0.0, 1.0, 0.5]);
        assert_eq!(min_max_scale(&[5.0, 5.0]), vec![1.0, 1.0]);
    }
}
