//! Fitting stakeholder-assigned discrimination truth values with a small
//! feed-forward regressor, and the toy fairness definition with a
//! business-necessity clause.
//!
//! The network is `d → 64 → 1` with logistic activations on both layers, so
//! every prediction is a truth value. Training is full-batch gradient
//! descent on mean squared error, stopping once an epoch improves the loss by
//! less than the tolerance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{evaluate, Expr, Valuation};
use crate::fairness::f_gen_published;
use crate::logic::{Logic, TruthValue};

pub const HIDDEN_UNITS: usize = 64;
pub const DEFAULT_LEARNING_RATE: f64 = 1e-3;
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BeliefError {
    #[error("no training examples")]
    NoExamples,
    #[error("expected {expected} features, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("feature {0} is not finite")]
    NonFiniteFeature(f64),
    #[error("training loss became non-finite at epoch {0}")]
    NonFiniteLoss(usize),
}

/// One stakeholder judgement: measured features (by default `1 − prule` and
/// `cv`) and the discrimination truth value assigned to them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeliefExample {
    pub features: Vec<f64>,
    pub target: TruthValue,
    pub max_deviation: Option<TruthValue>,
}

impl BeliefExample {
    pub fn new(features: Vec<f64>, target: TruthValue) -> Self {
        BeliefExample {
            features,
            target,
            max_deviation: None,
        }
    }

    /// Features `[1 − prule, cv]`.
    pub fn from_measures(prule: f64, cv: f64, target: TruthValue) -> Self {
        Self::new(vec![1.0 - prule, cv], target)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub tolerance: f64,
    pub max_epochs: usize,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            learning_rate: DEFAULT_LEARNING_RATE,
            tolerance: DEFAULT_TOLERANCE,
            max_epochs: 100_000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainingSummary {
    pub epochs: usize,
    pub final_loss: f64,
    /// Stopped on the tolerance rather than the epoch budget.
    pub converged: bool,
    /// Times the step was halved after an epoch increased the loss.
    pub step_halvings: usize,
    pub final_learning_rate: f64,
}

/// Trained weights. `hidden_weights[j]` holds the input weights of hidden
/// unit `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeliefModel {
    pub input_dim: usize,
    pub hidden_weights: Vec<Vec<f64>>,
    pub hidden_bias: Vec<f64>,
    pub output_weights: Vec<f64>,
    pub output_bias: f64,
    pub training: TrainingSummary,
}

fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

impl BeliefModel {
    fn init(input_dim: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || rng.random_range(-0.5..=0.5);
        let hidden_weights = (0..HIDDEN_UNITS)
            .map(|_| (0..input_dim).map(|_| draw()).collect())
            .collect();
        let hidden_bias = (0..HIDDEN_UNITS).map(|_| draw()).collect();
        let output_weights = (0..HIDDEN_UNITS).map(|_| draw()).collect();
        let output_bias = draw();
        BeliefModel {
            input_dim,
            hidden_weights,
            hidden_bias,
            output_weights,
            output_bias,
            training: TrainingSummary {
                epochs: 0,
                final_loss: f64::NAN,
                converged: false,
                step_halvings: 0,
                final_learning_rate: 0.0,
            },
        }
    }

    fn hidden(&self, x: &[f64]) -> Vec<f64> {
        self.hidden_weights
            .iter()
            .zip(&self.hidden_bias)
            .map(|(w, b)| sigmoid(b + w.iter().zip(x).map(|(w, x)| w * x).sum::<f64>()))
            .collect()
    }

    fn output(&self, h: &[f64]) -> f64 {
        sigmoid(
            self.output_bias
                + self
                    .output_weights
                    .iter()
                    .zip(h)
                    .map(|(w, h)| w * h)
                    .sum::<f64>(),
        )
    }

    fn loss(&self, examples: &[BeliefExample]) -> f64 {
        examples
            .iter()
            .map(|ex| {
                let y = self.output(&self.hidden(&ex.features));
                (y - ex.target.get()).powi(2)
            })
            .sum::<f64>()
            / examples.len() as f64
    }

    /// One full-batch gradient step; returns the updated model.
    fn stepped(&self, examples: &[BeliefExample], lr: f64) -> BeliefModel {
        let n = examples.len() as f64;
        let mut g_hw = vec![vec![0.0; self.input_dim]; HIDDEN_UNITS];
        let mut g_hb = vec![0.0; HIDDEN_UNITS];
        let mut g_ow = vec![0.0; HIDDEN_UNITS];
        let mut g_ob = 0.0;
        for ex in examples {
            let h = self.hidden(&ex.features);
            let y = self.output(&h);
            let dz2 = 2.0 * (y - ex.target.get()) / n * y * (1.0 - y);
            g_ob += dz2;
            for j in 0..HIDDEN_UNITS {
                g_ow[j] += dz2 * h[j];
                let dz1 = dz2 * self.output_weights[j] * h[j] * (1.0 - h[j]);
                g_hb[j] += dz1;
                for (g, x) in g_hw[j].iter_mut().zip(&ex.features) {
                    *g += dz1 * x;
                }
            }
        }
        let mut next = self.clone();
        for j in 0..HIDDEN_UNITS {
            next.output_weights[j] -= lr * g_ow[j];
            next.hidden_bias[j] -= lr * g_hb[j];
            for (w, g) in next.hidden_weights[j].iter_mut().zip(&g_hw[j]) {
                *w -= lr * g;
            }
        }
        next.output_bias -= lr * g_ob;
        next
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn check_examples(examples: &[BeliefExample]) -> Result<usize, BeliefError> {
    let first = examples.first().ok_or(BeliefError::NoExamples)?;
    let dim = first.features.len();
    for ex in examples {
        if ex.features.len() != dim {
            return Err(BeliefError::Dimension {
                expected: dim,
                got: ex.features.len(),
            });
        }
        if let Some(&bad) = ex.features.iter().find(|x| !x.is_finite()) {
            return Err(BeliefError::NonFiniteFeature(bad));
        }
    }
    Ok(dim)
}

pub fn train_belief_model(
    examples: &[BeliefExample],
    config: &TrainConfig,
) -> Result<BeliefModel, BeliefError> {
    let dim = check_examples(examples)?;
    let mut model = BeliefModel::init(dim, config.seed);
    let mut loss = model.loss(examples);
    let mut lr = config.learning_rate;
    let mut halvings = 0;
    let mut converged = false;
    let mut epochs = 0;
    while epochs < config.max_epochs {
        epochs += 1;
        let next = model.stepped(examples, lr);
        let next_loss = next.loss(examples);
        if !next_loss.is_finite() {
            return Err(BeliefError::NonFiniteLoss(epochs));
        }
        if next_loss > loss {
            lr /= 2.0;
            halvings += 1;
            continue;
        }
        let improvement = loss - next_loss;
        model = next;
        loss = next_loss;
        if improvement < config.tolerance {
            converged = true;
            break;
        }
    }
    model.training = TrainingSummary {
        epochs,
        final_loss: loss,
        converged,
        step_halvings: halvings,
        final_learning_rate: lr,
    };
    Ok(model)
}

pub fn predict_discrimination(model: &BeliefModel, features: &[f64]) -> Result<TruthValue, BeliefError> {
    if features.len() != model.input_dim {
        return Err(BeliefError::Dimension {
            expected: model.input_dim,
            got: features.len(),
        });
    }
    if let Some(&bad) = features.iter().find(|x| !x.is_finite()) {
        return Err(BeliefError::NonFiniteFeature(bad));
    }
    Ok(TruthValue::saturate(model.output(&model.hidden(features))))
}

/// Per-example fit check against the acceptable deviation, where given.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitCheck {
    pub target: f64,
    pub predicted: f64,
    pub deviation: f64,
    pub max_deviation: Option<f64>,
    pub accepted: bool,
}

pub fn validate_fit(model: &BeliefModel, examples: &[BeliefExample]) -> Result<Vec<FitCheck>, BeliefError> {
    examples
        .iter()
        .map(|ex| {
            let predicted = predict_discrimination(model, &ex.features)?.get();
            let deviation = (predicted - ex.target.get()).abs();
            let max_deviation = ex.max_deviation.map(TruthValue::get);
            Ok(FitCheck {
                target: ex.target.get(),
                predicted,
                deviation,
                max_deviation,
                accepted: max_deviation.is_none_or(|m| deviation <= m),
            })
        })
        .collect()
}

/// `(S & E & F) -> false` with `F ≜ Fgen & (((B & S) -> E) -> false)`.
pub fn toy_definition_expr() -> Expr {
    let clause = Expr::pred("B")
        .and(Expr::pred("S"))
        .implies(Expr::pred("E"))
        .implies(Expr::False);
    let free = Expr::pred("Fgen").and(clause);
    Expr::pred("S")
        .and(Expr::pred("E"))
        .and(free)
        .implies(Expr::False)
}

/// Fairness truth value of the toy definition. The generator predicate takes
/// the tabulated generation-space convention (1 for Gödel and Product).
pub fn evaluate_toy_definition(logic: Logic, s: TruthValue, e: TruthValue, b: TruthValue) -> TruthValue {
    let val = Valuation::new()
        .with("S", s)
        .with("E", e)
        .with("B", b)
        .with("Fgen", f_gen_published(logic, s, e));
    evaluate(&toy_definition_expr(), logic, &val).expect("all toy predicates are bound")
}

/// Five illustrative stakeholder judgements over `(1 − prule, cv)`. They are
/// synthetic and only exercise the pipeline.
pub fn illustrative_examples() -> Vec<BeliefExample> {
    let rows = [
        (1.00, 0.00, 0.05, 0.05),
        (0.90, 0.05, 0.20, 0.05),
        (0.77, 0.00, 0.20, 0.05),
        (0.60, 0.20, 0.55, 0.10),
        (0.40, 0.35, 0.85, 0.10),
    ];
    rows.iter()
        .map(|&(prule, cv, target, dev)| BeliefExample {
            max_deviation: Some(TruthValue::saturate(dev)),
            ..BeliefExample::from_measures(prule, cv, TruthValue::saturate(target))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(x: f64) -> TruthValue {
        TruthValue::new(x).unwrap()
    }

    #[test]
    fn toy_definition_worked_example() {
        let v = evaluate_toy_definition(Logic::Godel, tv(0.05), tv(0.19), tv(0.10));
        assert_eq!(v.get(), 1.0);
    }

    #[test]
    fn toy_definition_without_business_necessity() {
        // ((0 ⇒ e) ⇒ 0) = 0 kills F, so bias is 0 and fairness is 1.
        let v = evaluate_toy_definition(Logic::Godel, tv(0.5), tv(0.5), TruthValue::ZERO);
        assert_eq!(v.get(), 1.0);
    }

    #[test]
    fn toy_definition_is_identically_fair() {
        // The business-necessity clause zeroes F wherever s ⋆ e could be
        // positive, in every base logic.
        let grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        for logic in Logic::ALL {
            for &s in &grid {
                for &e in &grid {
                    for &b in &grid {
                        let v = evaluate_toy_definition(logic, tv(s), tv(e), tv(b));
                        assert_eq!(v.get(), 1.0, "{logic} s={s} e={e} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn errors() {
        let cfg = TrainConfig::default();
        assert_eq!(train_belief_model(&[], &cfg), Err(BeliefError::NoExamples));
        let bad = vec![
            BeliefExample::new(vec![0.1, 0.2], tv(0.3)),
            BeliefExample::new(vec![0.1], tv(0.3)),
        ];
        assert_eq!(
            train_belief_model(&bad, &cfg),
            Err(BeliefError::Dimension {
                expected: 2,
                got: 1
            })
        );
        let model = train_belief_model(&bad[..1], &TrainConfig { max_epochs: 3, ..cfg }).unwrap();
        assert!(matches!(
            predict_discrimination(&model, &[0.1]),
            Err(BeliefError::Dimension { .. })
        ));
    }

    #[test]
    fn model_json_round_trip() {
        let ex = vec![BeliefExample::new(vec![0.2, 0.1], tv(0.4))];
        let model = train_belief_model(
            &ex,
            &TrainConfig {
                max_epochs: 10,
                ..TrainConfig::default()
            },
        )
        .unwrap();
        let back = BeliefModel::from_json(&model.to_json()).unwrap();
        assert_eq!(back, model);
        assert_eq!(back.hidden_weights.len(), HIDDEN_UNITS);
    }
}
